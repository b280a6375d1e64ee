#include "support.hpp"

#include "pencil/cli.hpp"
#include "pencil/error.hpp"
#include "pencil/form_io.hpp"
#include "pencil/transvectant.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace pencil;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "pencil");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

BinaryForm from_ints(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c) {
        r.emplace_back(v);
    }
    return BinaryForm(std::move(r));
}

} // namespace

TEST_CASE("parsing forms")
{
    CHECK(parse_form("x1^3 - 2*x1*x2^2") == from_ints({1, 0, -2, 0}));
    CHECK(parse_form("1/2*x1^2*x2^2 + x1^4") ==
          BinaryForm({Rational(1), Rational(0), Rational(1, 2), Rational(0), Rational(0)}));
    CHECK(parse_form("  -x2^2 +3 x1 x2  ") == from_ints({0, 3, -1}));
    CHECK(parse_form("x1*x1*x2 + x1^2*x2") == from_ints({0, 2, 0, 0}));
    CHECK(parse_form("x1 - x1") == BinaryForm(1));
    CHECK(parse_form("5") == BinaryForm::constant(5));

    try {
        parse_form("x1^2 + x2");
        FAIL("inhomogeneous form accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'x2'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_form(""), ParseError);
    CHECK_THROWS_AS(parse_form("x3^2"), ParseError);
    CHECK_THROWS_AS(parse_form("x1^"), ParseError);
    CHECK_THROWS_AS(parse_form("1/0*x1"), Error);
    CHECK_THROWS_AS(parse_form("x1 +"), ParseError);
    CHECK_THROWS_AS(parse_form("x1 x2 )"), ParseError);
}

TEST_CASE("format and parse round trip")
{
    CHECK(format_form(from_ints({1, 0, -2, 0})) == "x1^3 - 2*x1*x2^2");
    CHECK(format_form(BinaryForm(3)) == "0*x1^3");
    CHECK(format_form(BinaryForm(0)) == "0");
    CHECK(parse_form(format_form(BinaryForm(3))) == BinaryForm(3));

    IntegerSource src(71);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryForm f = testing::rational_form(static_cast<int>(src.uniform(0, 9)), src, 12);
        CHECK(parse_form(format_form(f)) == f);
    }
}

TEST_CASE("json round trips")
{
    const BinaryForm f({Rational(1, 2), Rational(0), Rational(-3)});
    const auto j = form_to_json(f);
    CHECK(j.dump() == R"({"order":2,"coeffs":["1/2","0","-3"]})");
    CHECK(form_from_json(nlohmann::json::parse(j.dump())) == f);

    IntegerSource src(72);
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryForm g = testing::rational_form(static_cast<int>(src.uniform(0, 9)), src, 12);
        CHECK(form_from_json(nlohmann::json::parse(form_to_json(g).dump())) == g);
    }

    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"order":2,"coeffs":["1","2"]})")), ParseError);
    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"order":1,"coeffs":[1.5,"2"]})")), ParseError);
    CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"coeffs":["1"]})")), ParseError);

    const SyzygyTable t = syzygy_table(7, 3);
    CHECK(table_to_json(t).dump() == R"({"d":7,"r":3,"alphas":{"1,1":"10","1,2":"-80/11","2,2":"-175/121","1,3":"20/21"}})");
    for (int d = 5; d <= 12; ++d) {
        for (int r = 3; r <= (d + 1) / 2; ++r) {
            const SyzygyTable s = syzygy_table(d, r);
            const SyzygyTable back = table_from_json(nlohmann::json::parse(table_to_json(s).dump()));
            CHECK(back.d == s.d);
            CHECK(back.r == s.r);
            CHECK(back.alphas == s.alphas);
        }
    }
}

TEST_CASE("cli examples")
{
    const Run verify = run({"verify", "--d", "7", "--r", "3", "--trials", "20", "--seed", "1"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("20/20 syzygies vanish") != std::string::npos);

    const Run recover = run({"recover", "--d", "7", "--r", "4", "--seed", "5"});
    CHECK(recover.code == 0);
    CHECK(recover.out.find("recovered C7 matches direct transvectant") != std::string::npos);
    CHECK(recover.out.find("VERIFIED") != std::string::npos);

    const Run table = run({"syzygy-table", "--d", "7", "--r", "3", "--json"});
    CHECK(table.code == 0);
    CHECK(nlohmann::json::parse(table.out) ==
          nlohmann::json::parse(R"({"d":7,"r":3,"alphas":{"1,1":"10","1,2":"-80/11","2,2":"-175/121","1,3":"20/21"}})"));

    const Run tv = run({"transvect", "--q", "2", "--expr", "x1^2", "--expr", "x2^2"});
    CHECK(tv.code == 0);
    CHECK(tv.out.find(format_form(transvectant(parse_form("x1^2"), parse_form("x2^2"), 2))) != std::string::npos);

    const Run oracle = run({"oracle-theta", "--d", "5", "--r", "3", "--i", "1", "--j", "2", "--f", "1,2"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("MATCH") != std::string::npos);
    CHECK(oracle.out.find("MISMATCH") == std::string::npos);

    const Run gam = run({"gamma", "--r", "3", "--d", "7"});
    CHECK(gam.code == 0);

    const Run dim = run({"dim-syzygy", "--d", "7", "--r", "3", "--json"});
    CHECK(dim.code == 0);

    const Run nj = run({"ninej", "--twice-j", "2,2,4,2,2,4,4,4,0"});
    CHECK(nj.code == 0);
    CHECK(nj.out.find("1/150") != std::string::npos);

    const Run comb = run({"ninej-combinant", "--d", "7", "--r", "3", "--i", "1", "--j", "2"});
    CHECK(comb.code == 0);
    CHECK(comb.out.find("EQUIVALENT") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--d", "7"}).code == 2);
    CHECK(run({"syzygy-table", "--d", "7", "--r", "9"}).code == 2);
    CHECK(run({"transvect", "--q", "1", "--expr", "x1^2 + x2"}).code == 2);
    CHECK(run({"oracle-theta", "--d", "9", "--r", "3", "--i", "1", "--j", "1"}).code == 2);
    CHECK(run({"ninej", "--twice-j", "1,1,1,2,2,2,2,2,2"}).code == 2);
    CHECK(run({"gamma", "--r", "3", "--d", "7", "--format", "xml"}).code == 2);
}

TEST_CASE("cli output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"combinants", "--d", "6", "--seed", "9", "--json"},
             {"verify", "--d", "8", "--r", "4", "--trials", "3", "--seed", "4", "--json"},
             {"recover", "--d", "9", "--r", "5", "--seed", "2", "--json"},
         }) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
