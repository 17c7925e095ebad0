#include "hcv/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hcv/errors.hpp"

namespace hcv {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SweepCsvWriter::SweepCsvWriter(std::ostream& os) : os_(os) {
    os_ << "n,a,theta,case_branch,min_minor,max_root_modulus,max_dilatation_sample,"
           "chd_max_crossings,verdict\n";
}

void SweepCsvWriter::write(const SweepRecord& r) {
    os_ << r.n << ',' << fmt17(r.a) << ',' << fmt17(r.theta) << ',' << r.case_branch << ','
        << fmt17(r.min_minor) << ',' << fmt17(r.max_root_modulus) << ','
        << fmt17(r.max_dilatation_sample) << ',' << r.chd_max_crossings << ',' << r.verdict
        << '\n';
    if (!os_) ok_ = false;
}

void SweepCsvWriter::finish() {
    if (!ok_) {
        os_.clear();
        os_ << "#ABORTED\n";
        throw Error("sweep csv: sink write failed");
    }
    os_.flush();
}

SweepJsonWriter::SweepJsonWriter(std::ostream& os) : os_(os) { os_ << "[\n"; }

void SweepJsonWriter::write(const SweepRecord& r) {
    if (!first_) os_ << ",\n";
    first_ = false;
    os_ << "  {\"n\": " << r.n << ", \"a\": " << fmt17(r.a) << ", \"theta\": " << fmt17(r.theta)
        << ", \"case_branch\": \"" << r.case_branch << "\", \"min_minor\": " << fmt17(r.min_minor)
        << ", \"max_root_modulus\": " << fmt17(r.max_root_modulus)
        << ", \"max_dilatation_sample\": " << fmt17(r.max_dilatation_sample)
        << ", \"chd_max_crossings\": " << r.chd_max_crossings << ", \"verdict\": \"" << r.verdict
        << "\"}";
    if (!os_) ok_ = false;
}

void SweepJsonWriter::finish() {
    os_ << "\n]\n";
    if (!ok_ || !os_) {
        os_.clear();
        os_ << "#ABORTED\n";
        throw Error("sweep json: sink write failed");
    }
    os_.flush();
}

void SvgWriter::add_polyline(const std::vector<Complex>& points, const std::string& stroke) {
    lines_.push_back({points, stroke});
}

void SvgWriter::write(std::ostream& os) const {
    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
    bool seen = false;
    for (const Line& l : lines_) {
        for (Complex w : l.pts) {
            if (!is_finite(w)) throw Error("svg: non-finite sample");
            // SVG's y axis points down.
            const double x = w.real(), y = -w.imag();
            if (!seen) {
                xlo = xhi = x;
                ylo = yhi = y;
                seen = true;
            }
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    const double w = std::max(xhi - xlo, 1e-9), h = std::max(yhi - ylo, 1e-9);
    const double margin = 0.05 * std::max(w, h);
    char buf[128];
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!comment_.empty()) os << "<!-- " << comment_ << " -->\n";
    std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g %.9g", xlo - margin, ylo - margin,
                  w + 2 * margin, h + 2 * margin);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << buf
       << "\">\n";
    std::snprintf(buf, sizeof buf, "%.9g", 0.002 * std::max(w, h));
    const std::string stroke_width = buf;
    for (const Line& l : lines_) {
        os << "<polyline fill=\"none\" stroke=\"" << l.stroke << "\" stroke-width=\""
           << stroke_width << "\" points=\"";
        for (size_t i = 0; i < l.pts.size(); ++i) {
            if (i) os << ' ';
            std::snprintf(buf, sizeof buf, "%.9g,%.9g", l.pts[i].real(), -l.pts[i].imag());
            os << buf;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace hcv
