#include <doctest.h>

#include <cstring>
#include <string>

#include "ergolab.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  ergolab_free(text);
  return out;
}

}  // namespace

TEST_CASE("handle lifecycle and parse errors") {
  ergolab_set* set = nullptr;
  CHECK(ergolab_set_create("hindman", &set) == ERGOLAB_OK);
  REQUIRE(set != nullptr);
  ergolab_set_destroy(set);

  set = nullptr;
  CHECK(ergolab_set_create("nonsense", &set) == ERGOLAB_EPARSE);
  CHECK(std::strlen(ergolab_last_error()) > 0);
  CHECK(set == nullptr);

  ergolab_seq* seq = nullptr;
  CHECK(ergolab_seq_create("pow b=1", &seq) == ERGOLAB_EPARSE);
  CHECK(ergolab_seq_create("id", &seq) == ERGOLAB_OK);
  ergolab_seq_destroy(seq);

  ergolab_expr* expr = nullptr;
  CHECK(ergolab_expr_create("(E |", &expr) == ERGOLAB_EPARSE);
  CHECK(ergolab_expr_create("(E | ~E@3)", &expr) == ERGOLAB_OK);
  ergolab_expr_destroy(expr);

  CHECK(ergolab_set_create(nullptr, &set) == ERGOLAB_EPARSE);
}

TEST_CASE("density scan emits the documented CSV") {
  ergolab_set* set = nullptr;
  ergolab_expr* expr = nullptr;
  REQUIRE(ergolab_set_create("hindman", &set) == ERGOLAB_OK);
  REQUIRE(ergolab_expr_create("E", &expr) == ERGOLAB_OK);
  char* text = nullptr;
  REQUIRE(ergolab_density_scan(set, expr, "dyadic", 3, "csv", &text) == ERGOLAB_OK);
  CHECK(take(text) ==
        "N,numer,denom,decimal\n"
        "0,1,2,0.500000000000\n"
        "1,5,8,0.625000000000\n"
        "2,21,32,0.656250000000\n"
        "3,85,128,0.664062500000\n");
  // range errors surface as ERANGE
  text = nullptr;
  CHECK(ergolab_density_scan(set, expr, "dyadic", 0, "csv", &text) == ERGOLAB_ERANGE);
  CHECK(ergolab_density_scan(set, expr, "dyadic", 3, "yaml", &text) == ERGOLAB_EPARSE);
  ergolab_expr_destroy(expr);
  ergolab_set_destroy(set);
}

TEST_CASE("json output carries exact fractions") {
  ergolab_set* set = nullptr;
  ergolab_expr* expr = nullptr;
  REQUIRE(ergolab_set_create("periodic m=3 r=0", &set) == ERGOLAB_OK);
  REQUIRE(ergolab_expr_create("E", &expr) == ERGOLAB_OK);
  char* text = nullptr;
  REQUIRE(ergolab_density_scan(set, expr, "explicit [0,9)", 1, "json", &text) ==
          ERGOLAB_OK);
  std::string body = take(text);
  CHECK(body.find("\"fraction\": \"1/3\"") != std::string::npos);
  CHECK(body.find("\"decimal\": \"0.333333333333\"") != std::string::npos);
  ergolab_expr_destroy(expr);
  ergolab_set_destroy(set);
}

TEST_CASE("cover, correlate and cylinder drivers run end to end") {
  ergolab_set* set = nullptr;
  ergolab_seq* seq = nullptr;
  REQUIRE(ergolab_set_create("periodic m=4 r=0", &set) == ERGOLAB_OK);
  REQUIRE(ergolab_seq_create("id", &seq) == ERGOLAB_OK);
  char* text = nullptr;
  REQUIRE(ergolab_cover(set, seq, "1,2,4", 400, 4000, 200, "csv", &text) ==
          ERGOLAB_OK);
  std::string cover = take(text);
  CHECK(cover.rfind("K,numer,denom,decimal,witness_lo,witness_hi\n", 0) == 0);
  CHECK(cover.find("\n4,1,1,1.000000000000,") != std::string::npos);

  text = nullptr;
  REQUIRE(ergolab_correlate(set, 0, 10000, 8, "csv", &text) == ERGOLAB_OK);
  std::string corr = take(text);
  CHECK(corr.rfind("h,numer,denom,decimal\n", 0) == 0);
  CHECK(corr.find("ref_numer,ref_denom,ref_decimal\n1,16,") != std::string::npos);

  text = nullptr;
  REQUIRE(ergolab_cylinder_table(set, "E;(E & E@4)", "segments", 4, "csv", &text) ==
          ERGOLAB_OK);
  std::string cyl = take(text);
  CHECK(cyl.rfind("exprId,N,numer,denom,decimal\n", 0) == 0);
  CHECK(cyl.find("\"(E & E@4)\",4,1,4,0.250000000000\n") != std::string::npos);

  ergolab_seq_destroy(seq);
  ergolab_set_destroy(set);
}

TEST_CASE("witness and classify drivers run end to end") {
  ergolab_set* all = nullptr;
  ergolab_seq* seq = nullptr;
  REQUIRE(ergolab_set_create("all", &all) == ERGOLAB_OK);
  REQUIRE(ergolab_seq_create("id", &seq) == ERGOLAB_OK);
  char* text = nullptr;
  REQUIRE(ergolab_witness(all, 5, 100, 1000, 50, "csv", &text) == ERGOLAB_OK);
  CHECK(take(text) == "found,h,numer,denom,decimal,witness_lo,witness_hi\n0,,,,,,\n");

  text = nullptr;
  REQUIRE(ergolab_classify(seq, "periodic m=2 r=0;periodic m=3 r=0", "1,2,3", 300,
                           3000, 150, "csv", &text) == ERGOLAB_OK);
  std::string body = take(text);
  CHECK(body.find("periodic m=2 r=0,SWEEPING-EVIDENCE") != std::string::npos);
  CHECK(body.find("overall,SWEEPING-EVIDENCE") != std::string::npos);
  ergolab_seq_destroy(seq);
  ergolab_set_destroy(all);
}

TEST_CASE("weyl and spectral drivers accept scientific checkpoints") {
  ergolab_seq* seq = nullptr;
  REQUIRE(ergolab_seq_create("pow b=1 c=1.5", &seq) == ERGOLAB_OK);
  char* text = nullptr;
  REQUIRE(ergolab_weyl_scan(seq, "1e2,1e3", "0.3", "csv", &text) == ERGOLAB_OK);
  std::string body = take(text);
  CHECK(body.rfind("N,x,magnitude\n100,", 0) == 0);
  CHECK(body.find("x,ratio,decaying\n") != std::string::npos);

  text = nullptr;
  REQUIRE(ergolab_spectral(seq, "golden", 4, 200, 32, 9, 3, "csv", &text) ==
          ERGOLAB_OK);
  std::string sp = take(text);
  CHECK(sp.rfind("trial,lhs,rhs,gap\n", 0) == 0);
  CHECK(ergolab_spectral(seq, "golden", 4, 200, 4, 9, 3, "csv", &text) ==
        ERGOLAB_EPARSE);  // quadrature grid too small for any degree
  ergolab_seq_destroy(seq);
}

TEST_CASE("selftest through the C API is deterministic and passing") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(ergolab_selftest(123, &a) == ERGOLAB_OK);
  REQUIRE(ergolab_selftest(123, &b) == ERGOLAB_OK);
  std::string ra = take(a), rb = take(b);
  CHECK(ra == rb);
  CHECK(ra.find(" 0 failures") != std::string::npos);
}
