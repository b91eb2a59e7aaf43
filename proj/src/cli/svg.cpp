#include "bif/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace bif {

namespace {

constexpr double kSize = 640, kCenter = 320, kScale = 250;  // C_R has radius kScale on screen

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else o += c;
    }
    return o;
}

// Screen point at angle a and radius r (in units of R); y points down on screen.
std::string pt(double a, double r) { return num(kCenter + r * kScale * std::cos(a)) + "," + num(kCenter - r * kScale * std::sin(a)); }

// Annular sector from angle a0 counterclockwise to a1 between radii r0 < r1.
std::string sector(double a0, double a1, double r0, double r1) {
    double span = a1 - a0;
    int large = span > std::numbers::pi ? 1 : 0;
    std::ostringstream os;
    os << "M" << pt(a0, r1) << " A" << num(r1 * kScale) << "," << num(r1 * kScale) << " 0 " << large << ",0 " << pt(a1, r1)
       << " L" << pt(a1, r0) << " A" << num(r0 * kScale) << "," << num(r0 * kScale) << " 0 " << large << ",1 "
       << pt(a0, r0) << " Z";
    return os.str();
}

const char* kLevelColors[] = {"#1b7837", "#762a83", "#e08214", "#2166ac", "#b2182b", "#4d4d4d"};

}  // namespace

std::string render_svg(const Analysis& a, const std::vector<Rational>& levels) {
    const auto& r = a.report;
    const double R = r.radius.R.get_d();
    const double view = 1.25;  // visible half-width in units of R
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    os << "<title>" << escape(a.f.str()) << "</title>\n";

    // Sign of J on the circle between consecutive samples.
    os << "<g id=\"bands\" stroke=\"none\">\n";
    size_t n = r.arcs.size();
    for (size_t i = 0; i < n; ++i) {
        double a0 = r.arcs[i].sample.angle, a1 = r.arcs[(i + 1) % n].sample.angle;
        if (a1 <= a0) a1 += 2 * std::numbers::pi;
        Sign s = r.arcs[i].band_after;
        const char* fill = s == Sign::Positive ? "#cfe3ff" : (s == Sign::Negative ? "#ffd6d6" : "#eeeeee");
        // split long sectors so each SVG arc stays below a half turn
        int pieces = static_cast<int>(std::ceil((a1 - a0) / 3.0));
        for (int k = 0; k < pieces; ++k) {
            double b0 = a0 + (a1 - a0) * k / pieces, b1 = a0 + (a1 - a0) * (k + 1) / pieces;
            os << "<path class=\"band-" << (s == Sign::Positive ? "positive" : "negative") << "\" d=\""
               << sector(b0, b1, 0.94, 1.06) << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    os << "</g>\n";

    // Fibre contours from the oracle.
    os << "<g id=\"contours\" fill=\"none\" stroke-width=\"1\">\n";
    for (size_t l = 0; l < levels.size(); ++l) {
        const char* col = kLevelColors[l % (sizeof kLevelColors / sizeof *kLevelColors)];
        os << "<path class=\"level\" data-level=\"" << levels[l].get_str() << "\" stroke=\"" << col << "\" d=\"";
        for (auto& s : oracle::contour_segments(a.f, levels[l], view * R, 400)) {
            auto X = [&](double x) { return num(kCenter + x / R * kScale); };
            auto Y = [&](double y) { return num(kCenter - y / R * kScale); };
            os << "M" << X(s.x0) << "," << Y(s.y0) << "L" << X(s.x1) << "," << Y(s.y1);
        }
        os << "\"/>\n";
    }
    os << "</g>\n";

    os << "<circle id=\"milnor-circle\" cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kScale)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    os << "<g id=\"arcs\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (auto& arc : r.arcs) {
        double t = arc.sample.angle;
        os << "<circle class=\"arc-point\" cx=\"" << num(kCenter + kScale * std::cos(t)) << "\" cy=\""
           << num(kCenter - kScale * std::sin(t)) << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << num(kCenter + 1.12 * kScale * std::cos(t)) << "\" y=\""
           << num(kCenter - 1.12 * kScale * std::sin(t) + 4) << "\">" << arc.sample.index << "</text>\n";
    }
    os << "</g>\n";

    os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    double y = 16;
    os << "<text x=\"8\" y=\"" << num(y) << "\">R = " << r.radius.R.get_str() << "</text>\n";
    for (auto& c : r.clusters) {
        y += 14;
        std::string arcs;
        for (size_t k = 0; k < c.arc_indices.size(); ++k) arcs += (k ? "," : "") + std::to_string(c.arc_indices[k]);
        std::string line = c.value.str(6) + " " + monotonicity_name(c.direction) + " {" + arcs + "} " + parity_name(c.parity);
        if (c.phenomenon) line += std::string(" ") + phenomenon_name(*c.phenomenon);
        os << "<text class=\"cluster\" x=\"8\" y=\"" << num(y) << "\">" << escape(line) << "</text>\n";
    }
    for (size_t l = 0; l < levels.size(); ++l) {
        y += 14;
        os << "<text x=\"8\" y=\"" << num(y) << "\" fill=\"" << kLevelColors[l % (sizeof kLevelColors / sizeof *kLevelColors)]
           << "\">f = " << levels[l].get_str() << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace bif
