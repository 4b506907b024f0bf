#include <qstokes/gram.hpp>
#include <qstokes/io.hpp>
#include <qstokes/stokes.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace qstokes;

TEST_CASE("document json round trip is lossless") {
    const IMat s = build_S(10);  // entries beyond 2^16, still strings either way
    const MatrixDocument d = to_document("S", 10, s);
    const nlohmann::json j = to_json(d);
    const MatrixDocument back = document_from_json(j);
    CHECK(back.name == d.name);
    CHECK(back.kind == "integer");
    CHECK(back.rows == d.rows);
    CHECK(int_matrix_from_document(back) == s);
    // huge entries survive: 100-digit value
    IMat big(1);
    big(0, 0) = Int("123456789012345678901234567890123456789012345678901234567890");
    const auto b2 = int_matrix_from_document(
        document_from_json(to_json(to_document("big", 1, big))));
    CHECK(b2 == big);
}

TEST_CASE("rational documents") {
    const GramData g = gram_from_stokes(build_S(3));
    const MatrixDocument d = to_document("G", 3, g.g);
    CHECK(d.kind == "rational");
    CHECK(d.rows[0][1] == "-3/2");
}

TEST_CASE("identical invocations are byte identical") {
    const MatrixDocument a = to_document("S", 7, build_S(7));
    const MatrixDocument b = to_document("S", 7, build_S(7));
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("ray json and svg") {
    const RayDiagram d = stokes_rays(3);
    const nlohmann::json j = rays_to_json(d);
    CHECK(j.at("k") == 3);
    CHECK(j.at("rays").size() == 6);  // ordered pairs r != s
    bool found = false;
    for (const auto& r : j.at("rays"))
        if (r.at("label") == "R12") {
            CHECK(r.at("angle_over_pi") == "-1/3");
            found = true;
        }
    CHECK(found);
    const std::string svg = rays_to_svg(d);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("R12") != std::string::npos);
    // 2k distinct directions for k = 3
    std::size_t lines = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        pos += 5;
    }
    CHECK(lines == 2 * 3 + 1);  // 2k rays plus the admissible line
}
