#pragma once

// Machine-readable matrix documents and the ray-diagram SVG. Every exact
// entry is serialized as a decimal string (entries outgrow 2^53 quickly)
// and parses back losslessly.

#include <qstokes/exact.hpp>
#include <qstokes/stokes.hpp>

#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qstokes {

struct MatrixDocument {
    std::string name;
    int k = 0;
    std::string kind;  // "integer" | "rational" | "complex"
    std::vector<std::vector<std::string>> rows;
};

inline MatrixDocument to_document(const std::string& name, int k, const IMat& m) {
    MatrixDocument d{name, k, "integer", {}};
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
        d.rows.push_back(std::move(row));
    }
    return d;
}

inline MatrixDocument to_document(const std::string& name, int k, const QMat& m) {
    MatrixDocument d{name, k, "rational", {}};
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
        d.rows.push_back(std::move(row));
    }
    return d;
}

// Complex entries render as "re+imi" / "re-imi" with enough digits for a
// double; complex documents do not round-trip (the exact kinds do).
inline MatrixDocument to_document(const std::string& name, int k,
                                  const Matrix<std::complex<double>>& m) {
    MatrixDocument d{name, k, "complex", {}};
    char buf[64];
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const std::complex<double>& z = m(i, j);
            std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
            row.emplace_back(buf);
        }
        d.rows.push_back(std::move(row));
    }
    return d;
}

inline nlohmann::json to_json(const MatrixDocument& d) {
    return nlohmann::json{{"name", d.name}, {"k", d.k}, {"kind", d.kind}, {"rows", d.rows}};
}

inline MatrixDocument document_from_json(const nlohmann::json& j) {
    MatrixDocument d;
    d.name = j.at("name").get<std::string>();
    d.k = j.at("k").get<int>();
    d.kind = j.at("kind").get<std::string>();
    d.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return d;
}

inline IMat int_matrix_from_document(const MatrixDocument& d) {
    IMat m(d.rows.size());
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        if (d.rows[i].size() != d.rows.size()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < d.rows[i].size(); ++j) m(i, j) = Int(d.rows[i][j]);
    }
    return m;
}

inline std::string pretty(const MatrixDocument& d) {
    std::size_t width = 1;
    for (const auto& row : d.rows)
        for (const auto& e : row) width = std::max(width, e.size());
    std::ostringstream os;
    os << d.name << " (k=" << d.k << ", " << d.kind << ")\n";
    for (const auto& row : d.rows) {
        os << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << (j ? " " : "");
            os << std::string(width - row[j].size(), ' ') << row[j];
        }
        os << "]\n";
    }
    return os.str();
}

inline nlohmann::json rays_to_json(const RayDiagram& d) {
    nlohmann::json rays = nlohmann::json::array();
    for (const Ray& r : d.rays)
        rays.push_back({{"label", "R" + std::to_string(r.r) + std::to_string(r.s)},
                        {"angle_over_pi", r.q.get_str()},
                        {"angle_radians", d.angle_radians(r)}});
    return nlohmann::json{{"k", d.k},
                          {"epsilon_over_pi", d.epsilon_over_pi.get_str()},
                          {"shift_radians", d.shift},
                          {"rays", rays}};
}

// 2k rays from the origin, dashed admissible line, labels grouped per ray.
inline std::string rays_to_svg(const RayDiagram& d) {
    const double cx = 300, cy = 300, len = 250;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"black\"/>\n";
    const double pi = 3.14159265358979323846;
    const double eps = d.epsilon_over_pi.get_d() * pi;
    os << "  <line x1=\"" << cx - len * std::cos(eps) << "\" y1=\"" << cy + len * std::sin(eps)
       << "\" x2=\"" << cx + len * std::cos(eps) << "\" y2=\"" << cy - len * std::sin(eps)
       << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    // group coinciding rays
    std::vector<std::pair<double, std::string>> groups;
    for (const Ray& r : d.rays) {
        const double a = d.angle_radians(r);
        bool merged = false;
        for (auto& [angle, label] : groups)
            if (std::abs(angle - a) < 1e-9) {
                label += " R" + std::to_string(r.r) + std::to_string(r.s);
                merged = true;
                break;
            }
        if (!merged) groups.emplace_back(a, "R" + std::to_string(r.r) + std::to_string(r.s));
    }
    for (const auto& [a, label] : groups) {
        const double x = cx + len * std::cos(a), y = cy - len * std::sin(a);
        os << "  <line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x << "\" y2=\"" << y
           << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << cx + (len + 14) * std::cos(a) - 12 << "\" y=\""
           << cy - (len + 14) * std::sin(a) << "\" font-size=\"9\">" << label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qstokes
