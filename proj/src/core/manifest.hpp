#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "masks.hpp"
#include "split.hpp"
#include "types.hpp"

namespace fgcxr {

// One study's row in the manifest: file references plus inline transcript
// and finding labels. Paths are relative to the manifest directory.
struct ManifestEntry {
    std::string study_id;
    std::string image_path;
    std::string gaze_path;
    std::map<RegionId, std::string> mask_paths;
    std::vector<TimedSentence> transcript;
    FindingLabels labels;

    bool operator==(const ManifestEntry&) const = default;
};

struct Manifest {
    std::string format_version = "1.0";
    uint64_t seed = 0;
    std::vector<ManifestEntry> entries;
    SplitAssignment splits; // empty until `split` has run

    bool operator==(const Manifest&) const = default;
};

// Fully loaded study: raster data in memory, invariants checked.
struct StudyRecord {
    std::string study_id;
    GridF image; // grayscale, [0, 1]
    GazeSequence gaze;
    RegionMaskSet masks;
    std::vector<TimedSentence> transcript;
    FindingLabels labels;
};

// On-disk layout under `dir`:
//   manifest.jsonl  one study per line, stable key order
//   splits.csv      `study_id,split` rows, sorted by id (written when present)
//   manifest.json   format_version, seed, study count, CRC32 of the above
// Writes are guarded by an advisory lock file (manifest.lock).
void write_manifest(const Manifest& manifest, const std::string& dir);

// Verifies format_version, checksums, id uniqueness, split partition, and
// that every referenced file exists.
Manifest read_manifest(const std::string& dir);

StudyRecord load_study(const std::string& dir, const ManifestEntry& entry);

// Sidecar label ingest: CSV rows `study_id,finding,value` with value in
// {present, absent, unknown}.
std::map<std::string, FindingLabels> read_labels_csv(const std::string& path);

const std::string& label_value_name(LabelValue v);
LabelValue label_value_from_name(const std::string& name);

} // namespace fgcxr
