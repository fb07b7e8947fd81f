#include <doctest.h>

#include <random>
#include <sstream>

#include "dyngal/cli.hpp"
#include "dyngal/expr.hpp"

using namespace dyngal;
using expr::Expr;
using gf::Field;

namespace {

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

// Random trees respecting the grammar: Pow never applies to Pow.
std::unique_ptr<Expr> random_tree(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
  switch (pick(rng)) {
    case 0: return std::make_unique<Expr>(Expr::Kind::VarT);
    case 1: {
      auto e = std::make_unique<Expr>(Expr::Kind::IntLit);
      e->value = std::uniform_int_distribution<int>(0, 9)(rng);
      return e;
    }
    case 2: return std::make_unique<Expr>(Expr::Kind::Gen);
    case 3:
    case 4: {
      auto e = std::make_unique<Expr>(
          pick(rng) % 2 ? Expr::Kind::Add : Expr::Kind::Mul);
      e->lhs = random_tree(rng, depth - 1);
      e->rhs = random_tree(rng, depth - 1);
      return e;
    }
    case 5: {
      auto e = std::make_unique<Expr>(
          pick(rng) % 2 ? Expr::Kind::Sub : Expr::Kind::Div);
      e->lhs = random_tree(rng, depth - 1);
      e->rhs = random_tree(rng, depth - 1);
      return e;
    }
    default: {
      auto base = random_tree(rng, depth - 1);
      if (base->kind == Expr::Kind::Pow) return base;
      auto e = std::make_unique<Expr>(Expr::Kind::Pow);
      e->lhs = std::move(base);
      e->value = std::uniform_int_distribution<int>(0, 5)(rng);
      return e;
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("parsing the grammar examples") {
  auto e1 = expr::parse("t^3 + t");
  REQUIRE(e1->kind == Expr::Kind::Add);
  CHECK(e1->lhs->kind == Expr::Kind::Pow);
  CHECK(e1->lhs->value == 3);
  CHECK(e1->rhs->kind == Expr::Kind::VarT);

  auto e2 = expr::parse("g*t/(t+1)");
  REQUIRE(e2->kind == Expr::Kind::Div);
  CHECK(e2->lhs->kind == Expr::Kind::Mul);
  CHECK(e2->lhs->lhs->kind == Expr::Kind::Gen);
  CHECK(e2->rhs->kind == Expr::Kind::Add);

  try {
    expr::parse("t^");
    FAIL("expected a parse error");
  } catch (const expr::ParseError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(expr::parse("t + + t"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("(t"), expr::ParseError);
  CHECK_THROWS_AS(expr::parse("t)"), expr::ParseError);
}

TEST_CASE("print-parse round trip on random trees") {
  std::mt19937 rng(7777);
  for (int i = 0; i < 200; ++i) {
    auto e = random_tree(rng, 4);
    auto back = expr::parse(expr::print(*e));
    CHECK(same_tree(*e, *back));
  }
}

TEST_CASE("evaluation semantics") {
  Field k2 = Field::prime(2);
  CHECK(expr::eval_string(k2, "2") == ff::rf_zero(k2));        // integers mod p
  CHECK(expr::eval_string(k2, "t + t").is_zero());
  CHECK(expr::eval_string(k2, "t^0") == ff::rf_one(k2));
  CHECK_THROWS_AS(expr::eval_string(k2, "1/(t+t)"), std::domain_error);
  CHECK_THROWS_AS(expr::eval_string(k2, "g"), std::domain_error);  // prime field

  Field k4 = Field::make(2, 2);
  auto g = expr::eval_string(k4, "g^2 + g");
  CHECK(g == ff::rf_one(k4));  // z^2 + z = 1 for z^2 + z + 1 = 0
}

TEST_CASE("cli: criterion subcommand and exit codes") {
  std::string out;
  CHECK(run_cli({"--p", "2", "--json", "criterion", "--t0", "t", "--s0", "t^3"}, &out) == 0);
  CHECK(out.find("SurjectivePhi1") != std::string::npos);
  CHECK(out.find("\"schema_version\": 1") != std::string::npos);

  // Verdicts do not flip the exit code without --assert-surjective.
  CHECK(run_cli({"--p", "2", "criterion", "--t0", "t^2", "--s0", "t^3"}, &out) == 0);
  CHECK(out.find("NotSurjective") != std::string::npos);
  CHECK(run_cli({"--p", "2", "--assert-surjective", "criterion", "--t0", "t^2", "--s0",
                 "t^3"}) == 1);
  CHECK(run_cli({"--p", "2", "--assert-surjective", "criterion", "--t0", "t", "--s0",
                 "t^3"}) == 0);

  CHECK(run_cli({"--p", "2", "criterion", "--t0", "0", "--s0", "t"}) == 3);
  CHECK(run_cli({"--p", "2", "criterion", "--t0", "t^", "--s0", "t"}) == 2);
  CHECK(run_cli({"--p", "2", "nonsense"}) == 2);
}

TEST_CASE("cli: JSON output is byte-identical across runs") {
  for (auto args : {std::vector<std::string>{"--p", "2", "--json", "criterion", "--t0",
                                             "t", "--s0", "t^3"},
                    {"--p", "2", "--json", "asred", "1/t^2 + t^4"},
                    {"--p", "3", "--json", "disc", "--t0", "t", "--s0", "t", "-n", "2"},
                    {"--p", "2", "--json", "frobenius", "--t0", "t", "--s0", "t^3", "-n",
                     "2", "--max-deg", "4"}}) {
    std::string a, b;
    CHECK(run_cli(args, &a) == 0);
    CHECK(run_cli(args, &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
  }
}

TEST_CASE("cli: remaining subcommands smoke-test") {
  std::string out;
  CHECK(run_cli({"--p", "2", "--json", "asindep", "1/t", "1/t^3", "1/t^5"}, &out) == 0);
  CHECK(out.find("\"independent\": true") != std::string::npos);

  CHECK(run_cli({"--p", "2", "--json", "asindep", "1/t^2", "1/t"}, &out) == 0);
  CHECK(out.find("\"independent\": false") != std::string::npos);
  CHECK(out.find("\"dependency\"") != std::string::npos);

  CHECK(run_cli({"--p", "3", "--json", "kummer", "t^2", "--ell", "2"}, &out) == 0);
  CHECK(out.find("\"is_power\": true") != std::string::npos);

  CHECK(run_cli({"--p", "2", "--json", "carlitz", "t^2"}, &out) == 0);
  CHECK(out.find("tau") != std::string::npos);

  CHECK(run_cli({"--p", "2", "--json", "iterate", "--t0", "t", "--s0", "t^3", "-n", "2"},
                &out) == 0);
  CHECK(out.find("\"monomial_support_ok\": true") != std::string::npos);

  CHECK(run_cli({"--p", "3", "--json", "disc", "--t0", "t", "--s0", "t", "-n", "2"},
                &out) == 0);
  CHECK(out.find("\"matches\": true") != std::string::npos);

  CHECK(run_cli({"--p", "2", "--json", "group", "-n", "2", "--maximal", "--commutators"},
                &out) == 0);
  CHECK(out.find("\"phi1_order\": 8") != std::string::npos);
  CHECK(out.find("\"equals_augmentation_translations\": true") != std::string::npos);

  CHECK(run_cli({"--p", "2", "--json", "frobenius", "--t0", "t", "--s0", "t^3", "-n", "2",
                 "--max-deg", "6", "--serial"},
                &out) == 0);
  CHECK(out.find("\"status\": \"Certified\"") != std::string::npos);

  // g over F_4 in an input expression
  CHECK(run_cli({"--p", "2", "--r", "2", "--json", "asred", "g*t^2"}, &out) == 0);
  CHECK(run_cli({"--p", "2", "asred", "g"}, &out) == 3);
}
