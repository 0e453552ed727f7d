#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "zerosum/zeta_core.hpp"

using namespace zerosum;
using doctest::Approx;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("zerosum_test_" + name);
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

}  // namespace

TEST_SUITE("zeros") {

TEST_CASE("compute_zeros counts") {
  const auto t50 = compute_zeros(50.0);
  CHECK(t50.size() == 10);
  CHECK(std::abs(t50[0] - 14.134725141734694) < 1e-9);
  CHECK(std::abs(t50[9] - 49.7738324776723) < 1e-9);
  CHECK(t50.max_height() == 50.0);
  CHECK(t50.source() == ZeroTable::Source::computed);
  CHECK(compute_zeros(100.0).size() == 29);
  const auto& t = test::zeros_1000();
  CHECK(t.size() == 649);
  CHECK(std::abs(t[648] - 999.791571557413) < 1e-9);
  CHECK(std::abs(t[1] - 21.0220396387716) < 1e-10);
  CHECK(test::zeros_10000().size() == 10142);
}

TEST_CASE("compute_zeros is independent of worker count") {
  const auto a = compute_zeros(300.0, 1e-10, {}, 1);
  const auto b = compute_zeros(300.0, 1e-10, {}, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("compute_zeros preconditions") {
  CHECK_THROWS_AS(compute_zeros(10.0), DomainError);
  CHECK_THROWS_AS(compute_zeros(2e6), DomainError);
  CHECK_THROWS_AS(compute_zeros(100.0, 1e-13), DomainError);
}

TEST_CASE("property: |Z(gamma)| <= 10 tol on computed tables") {
  for (double g : test::zeros_1000().ordinates()) CHECK(std::abs(hardy_z(g)) <= 1e-9);
  const auto& big = test::zeros_10000();
  for (std::size_t k = 0; k < big.size(); k += 97) CHECK(std::abs(hardy_z(big[k])) <= 1e-9);
}

TEST_CASE("count_below") {
  const auto& t = test::zeros_1000();
  CHECK(t.count_below(20.0) == 1);
  CHECK(t.count_below(14.0) == 0);
  CHECK(count_below(t, 50.0) == 10);
  CHECK(t.count_below(1000.0) == 649);
  CHECK_THROWS_AS(t.count_below(1000.5), CoverageError);
  CHECK_THROWS_AS(t.count_below(0.0), DomainError);
}

TEST_CASE("s_plus_f") {
  const auto& t = test::zeros_1000();
  CHECK(s_plus_f(t, 100.0) == Approx(29.0 - 29.0023435873264).epsilon(1e-9));
  CHECK(s_plus_f(t, 2.0) == Approx(-count_main_term(2.0)).epsilon(1e-14));
  CHECK(s_plus_f(t, 2.0) == Approx(-0.1923).epsilon(1e-3));
  const double g1 = t[0];
  const double jump = s_plus_f(t, g1 + 1e-9) - s_plus_f(t, g1 - 1e-9);
  CHECK(jump == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("property: |s_plus_f(u)| <= 1 + log u on [20, max_height]") {
  const auto& t = test::zeros_10000();
  for (int k = 0; k <= 1000; ++k) {
    const double u = 20.0 + (t.max_height() - 20.0) * k / 1000.0;
    CHECK(std::abs(s_plus_f(t, u)) <= 1.0 + std::log(u));
  }
}

TEST_CASE("property: inverse Riemann-von Mangoldt") {
  const auto& t = test::zeros_10000();
  for (std::size_t k = 0; k < t.size(); ++k)
    CHECK(std::abs(count_main_term(t[k]) - static_cast<double>(k + 1)) <= 3.0);
  CHECK_NOTHROW(check_rvm_consistency(t));
}

TEST_CASE("ZeroTable validation") {
  CHECK_THROWS_AS(ZeroTable({21.0, 14.5}, 30.0, ZeroTable::Source::imported), FormatError);
  CHECK_THROWS_AS(ZeroTable({13.0}, 30.0, ZeroTable::Source::imported), FormatError);
  CHECK_THROWS_AS(ZeroTable({20.0, 25.0}, 24.0, ZeroTable::Source::imported), FormatError);
  CHECK_THROWS_AS(check_rvm_consistency(ZeroTable({14.2, 500.0}, 500.0, ZeroTable::Source::imported)),
                  FormatError);
}

TEST_CASE("import_zeros") {
  const auto t = import_zeros(temp_file("ok.txt", "14.134725\n21.022040\n"));
  CHECK(t.size() == 2);
  CHECK(t.source() == ZeroTable::Source::imported);
  CHECK(t.max_height() == 21.022040);

  try {
    import_zeros(temp_file("desc.txt", "21.0\n14.1\n"));
    FAIL("expected FormatError");
  } catch (const EmptyTableError&) {
    FAIL("wrong error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }

  const auto c = import_zeros(temp_file("comment.txt", "# Odlyzko table\n\n14.134725142\n  21.022039639\r\n"));
  CHECK(c.size() == 2);

  try {
    import_zeros(temp_file("nan.txt", "14.2\nabc\n"));
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(import_zeros(temp_file("empty.txt", "# nothing\n")), EmptyTableError);
  CHECK_THROWS_AS(import_zeros("/nonexistent/zeros.txt"), IoError);
}

TEST_CASE("property: text round trip is exact") {
  const auto& t = test::zeros_1000();
  const auto p = std::filesystem::temp_directory_path() / "zerosum_test_roundtrip.txt";
  write_zeros_text(t, p);
  const auto back = import_zeros(p);
  REQUIRE(back.size() == t.size());
  for (std::size_t k = 0; k < t.size(); ++k) CHECK(back[k] == t[k]);
}

TEST_CASE("binary cache") {
  const auto& t = test::zeros_1000();
  const auto p = std::filesystem::temp_directory_path() / "zerosum_test_cache.bin";
  save_zeros(t, p);
  const auto back = load_zeros(p);
  REQUIRE(back.size() == t.size());
  CHECK(back.max_height() == t.max_height());
  for (std::size_t k = 0; k < t.size(); ++k) CHECK(back[k] == t[k]);
  CHECK(std::filesystem::file_size(p) == 5 + 8 + 8 * (t.size() + 1));

  std::filesystem::resize_file(p, std::filesystem::file_size(p) - 3);
  CHECK_THROWS_AS(read_zeros_cache(p), FormatError);
}

}
