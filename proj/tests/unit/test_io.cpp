#include <doctest.h>

#include "pencil_tns/error.hpp"
#include "pencil_tns/io.hpp"
#include "pencil_tns/rng.hpp"

using namespace ptns;

TEST_CASE("rationals and binary forms") {
    CHECK(to_json(Rational(3, 6)) == "1/2");
    CHECK(to_json(Rational(-4)) == "-4");
    CHECK(rational_from_json(Json("-7/21"), "x") == Rational(-1, 3));
    CHECK(rational_from_json(Json(5), "x") == Rational(5));
    CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), InputError);
    CHECK_THROWS_AS(rational_from_json(Json(1.5), "x"), InputError);

    BinaryForm f(2, {Rational(1), Rational(-3, 2), Rational(0)});
    Json j = to_json(f);
    CHECK(j.dump() == R"({"degree":2,"coeffs":["1","-3/2","0"]})");
    CHECK(binary_form_from_json(j) == f);
    CHECK_THROWS_AS(binary_form_from_json(parse_json(R"({"degree":2,"coeffs":["1"]})")), InputError);
}

TEST_CASE("tensors dense and sparse") {
    auto t = random_tensor({2, 3, 2}, 9, -50, 50);
    t.entries()[3] = Rational(7, 3);
    Json j = to_json(t);
    CHECK(j["domain"] == "rational");
    CHECK(tensor_from_json(j) == t);
    CHECK(tensor_from_json(parse_json(j.dump())) == t);

    auto sparse = tensor_from_json(parse_json(R"({"shape":[2,2],"nz":[{"idx":[1,0],"val":"2/3"},{"idx":[0,1],"val":"-1"}]})"));
    CHECK(sparse.at({1, 0}) == Rational(2, 3));
    CHECK(sparse.at({0, 1}) == Rational(-1));
    CHECK(sparse.at({0, 0}).is_zero());
    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"shape":[2,2],"nz":[{"idx":[2,0],"val":"1"}]})")), InputError);
    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"shape":[2,2],"entries":["1"]})")), InputError);
}

TEST_CASE("pencils") {
    auto p = assemble({{BlockKind::left, 1, {}, {}}, {BlockKind::jordan, 2, Rational(1), Rational(0)}});
    Json j = to_json(p);
    CHECK(j["n1"] == 3);
    CHECK(j["n2"] == 4);
    CHECK(pencil_from_json(j) == p);
    CHECK(pencil_from_json(to_json(p.to_tensor())) == p);
    CHECK(pencil_from_json(parse_json(R"({"n1":0,"n2":0,"A":[],"B":[]})")).rows() == 0);

    try {
        pencil_from_json(parse_json(R"({"n1":1,"n2":2,"A":[["1","x"]],"B":[["0","0"]]})"));
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("A[0][1]") != std::string::npos);
    }
    CHECK_THROWS_AS(pencil_from_json(parse_json(R"({"n1":1,"A":[["1"]],"B":[["0"]]})")), InputError);
}

TEST_CASE("malformed JSON reports the line") {
    try {
        parse_json("{\n  \"n1\": 1,\n  \"n2\": ,\n}", "bad.json");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("bad.json:3:") != std::string::npos);
    }
}

TEST_CASE("networks") {
    Network net = Network::triangle(2, 3, 2, 2, 5, 6);
    Json j = to_json(net);
    Network back = network_from_json(j);
    CHECK(back.dims() == net.dims());
    REQUIRE(back.edges().size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(back.edges()[k].u == net.edges()[k].u);
        CHECK(back.edges()[k].v == net.edges()[k].v);
        CHECK(back.edges()[k].m == net.edges()[k].m);
    }
    CHECK_THROWS_AS(network_from_json(parse_json(R"({"vertices":[{"n":2}],"edges":[{"u":0,"v":3,"m":2}]})")), InputError);
}

TEST_CASE("kronecker form JSON") {
    auto p = assemble({{BlockKind::left, 1, {}, {}}, {BlockKind::jordan, 2, Rational(1), Rational(0)}});
    Json j = to_json(kronecker_decompose(p));
    REQUIRE(j["blocks"].size() == 2);
    CHECK(j["blocks"][0]["kind"] == "L");
    CHECK(j["blocks"][0]["size"] == 1);
    CHECK(j["blocks"][1]["kind"] == "J");
    CHECK(j["blocks"][1]["size"] == 2);
    CHECK(j["blocks"][1]["eigenvalue"] == "(1:0)");
    CHECK(to_json(kronecker_decompose(MatrixPencil{})).at("blocks").empty());
}

TEST_CASE("reports serialize deterministically") {
    auto t1 = to_json(verify_named_degeneration("iv2")).dump();
    auto t2 = to_json(verify_named_degeneration("iv2")).dump();
    CHECK(t1 == t2);
    CHECK(to_json(verify_restriction(Rational(2)))["mu"] == "mu in Q[mu]/(mu^3 - 9)");
    CHECK(to_json(curve_iii2())["lambda_eps"] == "(1)*eps^-1");
}
