#include "doctest.h"

#include "gradsw/catalog/catalog.hpp"
#include "gradsw/io/json_io.hpp"
#include "gradsw/switch/switch.hpp"

using namespace gradsw;
using io::json;

namespace {

std::string pointer_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const SchemaError& e) {
        return e.pointer();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("field elements") {
    PrimeField F(7);
    CHECK(io::element_json(F, 5) == "5");
    CHECK(io::parse_element(F, "6", "/x") == 6);
    CHECK(pointer_of([&] { io::parse_element(F, "7", "/x"); }) == "/x");
    CHECK(pointer_of([&] { io::parse_element(F, 3, "/x"); }) == "/x");
    CHECK(pointer_of([&] { io::parse_element(F, "-1", "/x"); }) == "/x");

    auto K = ExtensionField::artin_schreier(5);
    auto g = K.gamma();
    CHECK(io::element_json(K, g) == json::parse(R"(["0","1","0","0","0"])"));
    CHECK(io::parse_element(K, io::element_json(K, K.pow(g, 7)), "") == K.pow(g, 7));
    CHECK(pointer_of([&] { io::parse_element(K, json::parse(R"(["0","1"])"), "/c"); }) == "/c");

    // t^5 - t - 1 as its coefficient list
    auto fj = io::field_json(K);
    CHECK(fj["field_modulus"] == json::parse(R"(["4","4","0","0","0","1"])"));
    auto back = io::parse_field(fj);
    REQUIRE(std::holds_alternative<ExtensionField>(back));
    CHECK(std::get<ExtensionField>(back) == K);
    CHECK(std::holds_alternative<PrimeField>(io::parse_field(io::field_json(F))));
    CHECK(pointer_of([] { io::parse_field(json{{"p", 4}, {"field_degree", 1}}); }) == "/p");
    // t^2 + 1 splits mod 5
    CHECK(pointer_of([] {
              io::parse_field(json{{"p", 5}, {"field_degree", 2}, {"field_modulus", {"1", "0", "1"}}});
          }) == "/field_modulus");
}

TEST_CASE("algebra round trip") {
    for (auto c : {zassenhaus(5, 2), albert_zassenhaus(5, 1, 1), divided_power_algebra2(3, 1, 2)}) {
        io::AlgebraInfo info{c.name, json(c.params), c.aliases};
        auto doc = io::algebra_json(c.algebra, info);
        // through text, as the CLI does
        auto reread = json::parse(doc.dump());
        io::check_header(reread, "algebra");
        auto a = io::parse_algebra(c.algebra.field(), reread);
        CHECK(a == c.algebra);
        CHECK(io::algebra_json(a, io::parse_algebra_info(reread)) == doc);
        auto g = io::parse_grading(c.algebra.field(), json::parse(io::grading_json(c.grading).dump()));
        CHECK(g.group() == c.grading.group());
        REQUIRE(g.size() == c.grading.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(g.components()[i].degree == c.grading.components()[i].degree);
            CHECK(g.components()[i].basis == c.grading.components()[i].basis);
        }
    }
}

TEST_CASE("extension-field grading round trip") {
    auto w = zassenhaus(5, 1);
    auto gr = coarsen(w.grading, GroupHom::project_to_cyclic(w.grading.group(), 0, 5));
    auto res = switch_laguerre(w.algebra, gr, ad_basis(w.algebra, 0));
    const auto doc = io::grading_json(res.grading());
    CHECK(doc["field_degree"] == 5);
    auto K = std::get<ExtensionField>(io::parse_field(doc));
    auto g = io::parse_grading(K, doc);
    CHECK(verify_grading(extend_scalars(w.algebra, K), g).ok);
    CHECK(io::grading_json(g) == doc);
}

TEST_CASE("schema errors carry JSON pointers") {
    auto w = zassenhaus(3, 1);
    const auto& F = w.algebra.field();
    auto doc = io::algebra_json(w.algebra, {w.name, json::object(), w.aliases});
    CHECK(pointer_of([&] { io::check_header(doc, "grading"); }) == "/kind");
    auto bad = doc;
    bad["schema"] = 2;
    CHECK(pointer_of([&] { io::check_header(bad, "algebra"); }) == "/schema");
    bad = doc;
    bad["constants"][1][2] = 99;
    CHECK(pointer_of([&] { io::parse_algebra(F, bad); }) == "/constants/1/2");
    bad = doc;
    bad["constants"][0][3] = "x";
    CHECK(pointer_of([&] { io::parse_algebra(F, bad); }) == "/constants/0/3");
    bad = doc;
    bad.erase("basis");
    CHECK(pointer_of([&] { io::parse_algebra(F, bad); }) == "/basis");
    bad = doc;
    bad["dim"] = 4;
    CHECK(pointer_of([&] { io::parse_algebra(F, bad); }) == "/dim");

    auto gdoc = io::grading_json(w.grading);
    auto gb = gdoc;
    gb["components"][1]["basis"][0].erase(0);
    CHECK(pointer_of([&] { io::parse_grading(F, gb); }) == "/components/1/basis/0");
    gb = gdoc;
    gb["components"][0]["degree"]["free"] = json::array();
    CHECK(pointer_of([&] { io::parse_grading(F, gb); }) == "/components/0/degree");
    gb = gdoc;
    gb["group"]["torsion"] = {1};
    CHECK(pointer_of([&] { io::parse_grading(F, gb); }) == "/group");
    // two components with the same degree
    gb = gdoc;
    gb["components"][1]["degree"] = gb["components"][0]["degree"];
    CHECK(pointer_of([&] { io::parse_grading(F, gb); }) == "/components");
}
