// Core data model: nodule annotations from multiple annotators per image,
// including explicit "reviewed, found nothing" records.
//
// Conventions used throughout the library:
//   - coordinates are (z, y, x) in mm, stored as Eigen::Array3d
//   - annotator and image ids are opaque strings
//   - the annotator id "merged" is reserved for pipeline output

#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace anno {

// Elementwise 3-vector in (z, y, x) order.
using Vec3 = Eigen::Array3d;

inline constexpr const char* kMergedAnnotatorId = "merged";

// Thrown for malformed input files; message carries file/line context.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when data violates a model invariant (duplicate review rows,
// inconsistent records, mismatched grids, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoduleRecord {
    std::string image_id;
    std::string annotator_id;
    Vec3 center{0, 0, 0};  // mm
    Vec3 radii{0, 0, 0};   // mm, strictly positive
    std::optional<double> confidence;  // in [0, 1] when present
};

// An annotator examined the image and reported zero nodules.
struct ReviewRecord {
    std::string image_id;
    std::string annotator_id;
};

// Immutable multi-annotator annotation table. Validates on construction:
//   - nodule geometry finite, radii > 0, confidence in [0,1]
//   - no duplicate ReviewRecord for the same (image, annotator)
//   - no annotator with both nodules and a review row on one image
// Duplicate identical NoduleRecords are allowed (agreement signal).
class AnnotationTable {
public:
    AnnotationTable() = default;
    AnnotationTable(std::vector<NoduleRecord> nodules, std::vector<ReviewRecord> reviews);

    const std::vector<NoduleRecord>& nodules() const { return nodules_; }
    const std::vector<ReviewRecord>& reviews() const { return reviews_; }

    // Sorted unique image ids appearing in nodules or reviews.
    const std::vector<std::string>& images() const { return images_; }
    // Sorted unique annotator ids appearing anywhere in the table.
    const std::vector<std::string>& annotators() const { return annotators_; }

    // Indices into nodules() for one image, in nodules() order.
    const std::vector<std::size_t>& nodule_indices(const std::string& image_id) const;

    bool empty() const { return nodules_.empty() && reviews_.empty(); }

private:
    std::vector<NoduleRecord> nodules_;
    std::vector<ReviewRecord> reviews_;
    std::vector<std::string> images_;
    std::vector<std::string> annotators_;
    std::map<std::string, std::vector<std::size_t>> nodules_by_image_;
    std::map<std::string, std::set<std::string>> annotators_by_image_;

    friend std::vector<std::string> annotators_of(const AnnotationTable&, const std::string&);
};

// Union of annotators with nodules or review rows on the image, sorted.
// Unknown image yields an empty set.
std::vector<std::string> annotators_of(const AnnotationTable& table, const std::string& image_id);

}  // namespace anno
