#include "qvp/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qvp {

std::string format_sci(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12e", x);
    return buffer;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("write_text_atomic: cannot open " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write_text_atomic: write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string distribution_csv(const Distribution& dist) {
    std::ostringstream out;
    out << "w,probability\n";
    for (int j = 0; j < dist.lattice.sites; ++j) {
        out << format_sci(dist.lattice.label(j)) << ',' << format_sci(dist.masses(j))
            << '\n';
    }
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "N,delta_w,separation,predicted,rel_error,origin_suppression,tv_to_gaussian\n";
    for (const SweepRow& row : rows) {
        out << row.steps << ',' << format_sci(row.step_length) << ','
            << format_sci(row.separation) << ',' << format_sci(row.predicted) << ','
            << format_sci(row.relative_error) << ','
            << format_sci(row.origin_suppression) << ','
            << format_sci(row.tv_to_gaussian) << '\n';
    }
    return out.str();
}

std::string distribution_svg(const Distribution& dist) {
    constexpr int width = 800;
    constexpr int height = 400;
    constexpr int margin = 40;

    const double w_lo = dist.lattice.label(0);
    const double w_hi = dist.lattice.label(dist.lattice.sites - 1);
    const double mass_hi = std::max(dist.masses.maxCoeff(), 1e-300);

    auto x_of = [&](double w) {
        return margin + (w - w_lo) / (w_hi - w_lo) * (width - 2 * margin);
    };
    auto y_of = [&](double mass) {
        return height - margin - mass / mass_hi * (height - 2 * margin);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    char buffer[64];
    for (int j = 0; j < dist.lattice.sites; ++j) {
        std::snprintf(buffer, sizeof(buffer), "%.3f,%.3f ", x_of(dist.lattice.label(j)),
                      y_of(dist.masses(j)));
        out << buffer;
    }
    out << "\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"12\">w</text>\n";
    out << "  <text x=\"12\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 12 "
        << height / 2 << ")\">P(w)</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace qvp
