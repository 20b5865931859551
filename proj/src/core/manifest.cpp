#include "manifest.hpp"

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "gaze_log.hpp"
#include "png_io.hpp"
#include "text_util.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace fgcxr {

namespace {

constexpr const char* kSupportedVersion = "1.0";
constexpr const char* kJsonlName = "manifest.jsonl";
constexpr const char* kSplitsName = "splits.csv";
constexpr const char* kMetaName = "manifest.json";
constexpr const char* kLockName = "manifest.lock";

const std::array<std::string, 3> kLabelNames = {"present", "absent", "unknown"};

uint32_t crc32_of(const std::string& bytes) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    crc = ::crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()),
                  static_cast<uInt>(bytes.size()));
    return static_cast<uint32_t>(crc);
}

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("UnreadableFile", "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_bytes(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_data("UnwritableFile", "cannot create '" + path.string() + "'");
    out << bytes;
    if (!out) throw_data("UnwritableFile", "failed writing '" + path.string() + "'");
}

// Advisory single-writer lock: exclusive-create of a lock file.
class ManifestLock {
public:
    explicit ManifestLock(const fs::path& dir) : path_(dir / kLockName) {
        std::error_code ec;
        if (fs::exists(path_, ec))
            throw_data("LockHeld", "manifest lock '" + path_.string() + "' already held");
        std::ofstream lock(path_);
        if (!lock) throw_data("UnwritableFile", "cannot create lock '" + path_.string() + "'");
    }
    ~ManifestLock() {
        std::error_code ec;
        fs::remove(path_, ec);
    }

private:
    fs::path path_;
};

ordered_json entry_to_json(const ManifestEntry& e) {
    ordered_json masks = ordered_json::object();
    for (RegionId r : kAllRegions) {
        auto it = e.mask_paths.find(r);
        if (it == e.mask_paths.end())
            throw_data("MissingRegion",
                       "study '" + e.study_id + "': no mask path for '" + region_key(r) + "'");
        masks[region_key(r)] = it->second;
    }
    ordered_json transcript = ordered_json::array();
    for (const auto& s : e.transcript) {
        transcript.push_back(
            ordered_json{{"text", s.text}, {"t_start", s.t_start}, {"t_end", s.t_end}});
    }
    ordered_json labels = ordered_json::object();
    for (const auto& [name, value] : e.labels) labels[name] = label_value_name(value);
    return ordered_json{{"study_id", e.study_id}, {"image", e.image_path},
                        {"gaze", e.gaze_path},    {"masks", masks},
                        {"transcript", transcript}, {"labels", labels}};
}

ManifestEntry entry_from_json(const ordered_json& j, int line_no) {
    auto fail = [line_no](const std::string& what) {
        throw_data("MalformedRow", "manifest.jsonl line " + std::to_string(line_no) + ": " + what);
    };
    ManifestEntry e;
    try {
        e.study_id = j.at("study_id").get<std::string>();
        e.image_path = j.at("image").get<std::string>();
        e.gaze_path = j.at("gaze").get<std::string>();
        for (RegionId r : kAllRegions) {
            const auto& masks = j.at("masks");
            if (!masks.contains(region_key(r)))
                fail("missing mask '" + region_key(r) + "'");
            e.mask_paths[r] = masks.at(region_key(r)).get<std::string>();
        }
        for (const auto& s : j.at("transcript")) {
            TimedSentence ts;
            ts.text = s.at("text").get<std::string>();
            ts.t_start = s.at("t_start").get<double>();
            ts.t_end = s.at("t_end").get<double>();
            if (ts.t_end < ts.t_start) fail("transcript sentence with t_end < t_start");
            if (trim(ts.text).empty()) fail("transcript sentence with empty text");
            e.transcript.push_back(std::move(ts));
        }
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
            e.labels[it.key()] = label_value_from_name(it.value().get<std::string>());
    } catch (const ordered_json::exception& ex) {
        fail(ex.what());
    }
    return e;
}

std::string render_jsonl(const Manifest& m) {
    std::string out;
    for (const auto& e : m.entries) {
        out += entry_to_json(e).dump();
        out += '\n';
    }
    return out;
}

std::string render_splits(const SplitAssignment& splits) {
    std::string out = "study_id,split\n";
    for (const auto& [id, s] : splits) out += id + "," + split_name(s) + "\n";
    return out;
}

void check_partition(const Manifest& m) {
    if (m.splits.empty()) return;
    std::set<std::string> ids;
    for (const auto& e : m.entries) ids.insert(e.study_id);
    for (const auto& [id, _] : m.splits) {
        if (!ids.contains(id))
            throw_data("SplitMismatch", "split assignment references unknown study '" + id + "'");
    }
    for (const auto& id : ids) {
        if (!m.splits.contains(id))
            throw_data("SplitMismatch", "study '" + id + "' has no split assignment");
    }
}

} // namespace

const std::string& label_value_name(LabelValue v) { return kLabelNames[static_cast<size_t>(v)]; }

LabelValue label_value_from_name(const std::string& name) {
    for (size_t i = 0; i < kLabelNames.size(); ++i)
        if (kLabelNames[i] == name) return static_cast<LabelValue>(i);
    throw_data("UnknownLabelValue", "no label value named '" + name + "'");
}

void write_manifest(const Manifest& manifest, const std::string& dir) {
    if (manifest.format_version != kSupportedVersion)
        throw_config("UnsupportedVersion",
                     "cannot write format_version '" + manifest.format_version + "'");
    std::set<std::string> seen;
    for (const auto& e : manifest.entries) {
        if (!seen.insert(e.study_id).second)
            throw_data("DuplicateId", "duplicate study id '" + e.study_id + "'");
    }
    check_partition(manifest);

    fs::path root(dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (!fs::is_directory(root))
        throw_config("UnwritableFile", "output directory '" + dir + "' is not writable");

    ManifestLock lock(root);

    std::string jsonl = render_jsonl(manifest);
    ordered_json meta{{"format_version", manifest.format_version},
                      {"seed", manifest.seed},
                      {"studies", manifest.entries.size()},
                      {"jsonl_crc32", crc32_of(jsonl)}};
    if (!manifest.splits.empty()) {
        std::string splits = render_splits(manifest.splits);
        meta["splits_crc32"] = crc32_of(splits);
        write_file_bytes(root / kSplitsName, splits);
    }
    write_file_bytes(root / kJsonlName, jsonl);
    write_file_bytes(root / kMetaName, meta.dump(2) + "\n");
}

Manifest read_manifest(const std::string& dir) {
    fs::path root(dir);
    ordered_json meta;
    try {
        meta = ordered_json::parse(read_file_bytes(root / kMetaName));
    } catch (const ordered_json::exception& ex) {
        throw_data("MalformedRow", std::string("manifest.json: ") + ex.what());
    }

    Manifest m;
    m.format_version = meta.value("format_version", std::string());
    if (m.format_version != kSupportedVersion)
        throw_data("UnsupportedVersion", "manifest format_version '" + m.format_version +
                                             "' is not supported (expected " + kSupportedVersion +
                                             ")");
    m.seed = meta.value("seed", uint64_t{0});

    std::string jsonl = read_file_bytes(root / kJsonlName);
    if (meta.contains("jsonl_crc32") &&
        meta["jsonl_crc32"].get<uint32_t>() != crc32_of(jsonl))
        throw_data("ChecksumMismatch", "manifest.jsonl checksum does not match manifest.json");

    std::istringstream lines(jsonl);
    std::string line;
    int line_no = 0;
    std::set<std::string> seen;
    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::exception& ex) {
            throw_data("MalformedRow",
                       "manifest.jsonl line " + std::to_string(line_no) + ": " + ex.what());
        }
        ManifestEntry e = entry_from_json(j, line_no);
        if (!seen.insert(e.study_id).second)
            throw_data("DuplicateId", "duplicate study id '" + e.study_id + "'");
        m.entries.push_back(std::move(e));
    }

    if (fs::exists(root / kSplitsName)) {
        std::string splits_bytes = read_file_bytes(root / kSplitsName);
        if (meta.contains("splits_crc32") &&
            meta["splits_crc32"].get<uint32_t>() != crc32_of(splits_bytes))
            throw_data("ChecksumMismatch", "splits.csv checksum does not match manifest.json");
        std::istringstream sl(splits_bytes);
        std::string row;
        if (!std::getline(sl, row) || trim(row) != "study_id,split")
            throw_data("MalformedRow", "splits.csv: expected header 'study_id,split'");
        while (std::getline(sl, row)) {
            row = trim(row);
            if (row.empty()) continue;
            auto comma = row.find(',');
            if (comma == std::string::npos)
                throw_data("MalformedRow", "splits.csv: bad row '" + row + "'");
            m.splits[row.substr(0, comma)] = split_from_name(row.substr(comma + 1));
        }
    }

    check_partition(m);

    // Every referenced file must exist before records can be trusted.
    for (const auto& e : m.entries) {
        auto must_exist = [&](const std::string& rel) {
            if (!fs::exists(root / rel))
                throw_data("BrokenReference",
                           "study '" + e.study_id + "': missing file '" + rel + "'");
        };
        must_exist(e.image_path);
        must_exist(e.gaze_path);
        for (const auto& [_, p] : e.mask_paths) must_exist(p);
    }
    return m;
}

StudyRecord load_study(const std::string& dir, const ManifestEntry& entry) {
    fs::path root(dir);
    StudyRecord rec;
    rec.study_id = entry.study_id;
    rec.image = read_png_gray_norm((root / entry.image_path).string());
    rec.gaze = parse_gaze_log_file((root / entry.gaze_path).string());

    std::map<RegionId, std::string> abs_paths;
    for (const auto& [r, p] : entry.mask_paths) abs_paths[r] = (root / p).string();
    rec.masks = load_masks(abs_paths);

    if (rec.masks.height() != rec.image.h || rec.masks.width() != rec.image.w)
        throw_data("DimensionMismatch",
                   "study '" + entry.study_id + "': masks are " + std::to_string(rec.masks.width()) +
                       "x" + std::to_string(rec.masks.height()) + ", image is " +
                       std::to_string(rec.image.w) + "x" + std::to_string(rec.image.h));

    for (const auto& f : rec.gaze.fixations) {
        if (!rec.image.in_bounds(f.y, f.x))
            throw_data("GazeOutOfBounds",
                       "study '" + entry.study_id + "': fixation (" + std::to_string(f.x) + "," +
                           std::to_string(f.y) + ") outside " + std::to_string(rec.image.w) + "x" +
                           std::to_string(rec.image.h));
    }

    rec.transcript = entry.transcript;
    rec.labels = entry.labels;
    return rec;
}

std::map<std::string, FindingLabels> read_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_data("UnreadableFile", "cannot open labels CSV '" + path + "'");
    std::map<std::string, FindingLabels> out;
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line) || trim(line) != "study_id,finding,value")
        throw_data("MalformedRow", "labels CSV: expected header 'study_id,finding,value'");
    ++line_no;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw_data("MalformedRow", "labels CSV line " + std::to_string(line_no) +
                                           ": expected 3 fields");
        out[line.substr(0, c1)][line.substr(c1 + 1, c2 - c1 - 1)] =
            label_value_from_name(line.substr(c2 + 1));
    }
    return out;
}

} // namespace fgcxr
