#ifndef HCV_IO_HPP
#define HCV_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "hcv/scalar.hpp"
#include "hcv/verifier.hpp"

namespace hcv {

/// 17 significant decimal digits: enough to re-audit verdicts without
/// re-running (doubles round-trip exactly).
std::string fmt17(double v);

/// CSV with the fixed column set
///   n,a,theta,case_branch,min_minor,max_root_modulus,max_dilatation_sample,
///   chd_max_crossings,verdict
class SweepCsvWriter {
public:
    explicit SweepCsvWriter(std::ostream& os);
    void write(const SweepRecord& r);
    void finish();           // flushes; emits "#ABORTED" if the stream failed
    bool ok() const { return ok_; }

private:
    std::ostream& os_;
    bool ok_ = true;
};

/// JSON array of objects with field names identical to the CSV columns.
class SweepJsonWriter {
public:
    explicit SweepJsonWriter(std::ostream& os);
    void write(const SweepRecord& r);
    void finish();
    bool ok() const { return ok_; }

private:
    std::ostream& os_;
    bool first_ = true;
    bool ok_ = true;
};

/// SVG 1.1 writer: one polyline element per traced curve, viewBox fitted to
/// the data, configuration echoed in a header comment for reproducibility.
class SvgWriter {
public:
    void add_polyline(const std::vector<Complex>& points, const std::string& stroke);
    void set_config_comment(const std::string& comment) { comment_ = comment; }
    /// Throws Error if any point is non-finite.
    void write(std::ostream& os) const;

private:
    struct Line {
        std::vector<Complex> pts;
        std::string stroke;
    };
    std::vector<Line> lines_;
    std::string comment_;
};

}  // namespace hcv

#endif
