#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "peakon/cli.hpp"
#include "peakon/error.hpp"
#include "peakon/io.hpp"
#include "peakon/report.hpp"

using namespace peakon;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::numerics;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace

TEST(Io, MeasureRoundTrip) {
  std::mt19937 rng(61);
  for (int k = 0; k < 20; ++k) {
    const auto omega = oracle::random_measure(rng, k % 6, oracle::Sign::mixed);
    const auto text = format_measure(omega);
    EXPECT_EQ(parse_measure(text), omega);
    EXPECT_EQ(format_measure(parse_measure(text)), text);
  }
  EXPECT_EQ(parse_measure(R"({"atoms":[]})").size(), 0u);
  // Unsorted input is normalized.
  EXPECT_EQ(parse_measure(R"({"atoms":[{"x":1,"w":2},{"x":-1,"w":3}]})")[0].x, -1.0);
}

TEST(Io, MeasureParseErrors) {
  for (const char* bad : {"", "{", "[]", R"({"atom":[]})", R"({"atoms":[{"x":1}]})", R"({"atoms":[{"x":"a","w":1}]})",
                          R"({"atoms":[{"x":1,"w":2,"y":3}]})", R"({"atoms":{}})", R"({"atoms":[],"extra":1})"}) {
    EXPECT_EQ(kind_of([&] { parse_measure(bad); }), ErrorKind::parse) << bad;
  }
  EXPECT_NE(kind_of([] { parse_measure(R"({"atoms":[{"x":800,"w":1}]})"); }), ErrorKind::numerics);
}

TEST(Io, SpectralRoundTrip) {
  const SpectralData d(Side::left, {{0.5, 2.0}, {1.5, 0.1}});
  const auto text = format_spectral(d);
  EXPECT_EQ(parse_spectral(text), d);
  EXPECT_EQ(kind_of([] { parse_spectral(R"({"side":"up","entries":[]})"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_spectral(R"({"entries":[]})"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_spectral(R"({"side":"right","entries":[{"lambda":1}]})"); }), ErrorKind::parse);
}

TEST(Io, NumberFormatting) {
  for (double v : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, 0.0, 1.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(csv_row(std::vector<double>{1, 0.5, -3}), "1,0.5,-3\n");
}

TEST(Io, DigestIsStable) {
  const auto omega = make_measure({{0, 1}, {1.5, 0.5}});
  EXPECT_EQ(measure_digest(omega), measure_digest(parse_measure(format_measure(omega))));
  EXPECT_NE(measure_digest(omega), measure_digest(make_measure({{0, 1}})));
  EXPECT_EQ(measure_digest(omega).size(), 16u);
}

TEST(Cli, GridAndList) {
  const auto g = cli::parse_grid("-1:1:5");
  EXPECT_EQ(g.points(), (std::vector<double>{-1, -0.5, 0, 0.5, 1}));
  EXPECT_EQ(cli::parse_grid("2:3:1").points(), std::vector<double>{2});
  for (const char* bad : {"1:2", "a:1:3", "0:1:0", "0:1:2.5", "0:1:3:4"}) {
    EXPECT_EQ(kind_of([&] { cli::parse_grid(bad); }), ErrorKind::parse) << bad;
  }
  EXPECT_EQ(cli::parse_list("0,1.5,-2"), (std::vector<double>{0, 1.5, -2}));
  EXPECT_EQ(kind_of([] { cli::parse_list("1,,2"); }), ErrorKind::parse);
}

TEST(Cli, ForwardExamples) {
  cli::Options opt;
  const auto single = cli::forward(R"({"atoms":[{"x":0,"w":1}]})", opt);
  EXPECT_EQ(single.exit_code, 0);
  const auto d = parse_spectral(single.text);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NEAR(d.entries()[0].lambda, 1.0, 1e-15);
  EXPECT_NEAR(d.entries()[0].gamma2, 1.0, 1e-15);

  EXPECT_TRUE(parse_spectral(cli::forward(R"({"atoms":[]})", opt).text).empty());
  // Identical input, identical bytes.
  const std::string two = R"({"atoms":[{"x":-0.3,"w":1.1},{"x":0.9,"w":0.4}]})";
  EXPECT_EQ(cli::forward(two, opt).text, cli::forward(two, opt).text);
}

TEST(Cli, InverseRoundTrip) {
  std::mt19937 rng(62);
  cli::Options opt;
  for (int k = 0; k < 5; ++k) {
    const auto omega = oracle::random_measure(rng, 1 + k, oracle::Sign::positive);
    const auto back = parse_measure(cli::inverse(cli::forward(format_measure(omega), opt).text, opt).text);
    EXPECT_LT(oracle::measure_distance(back, omega), 1e-9);
  }
  EXPECT_EQ(kind_of([&] { cli::inverse(R"({"side":"right","entries":[{"lambda":1,"gamma2":1},{"lambda":-1,"gamma2":-1}]})", opt); }),
            ErrorKind::indefinite_not_supported);
  EXPECT_EQ(kind_of([&] { cli::inverse(R"({"side":"right","entries":[{"lambda":1,"gamma2":-1}]})", opt); }),
            ErrorKind::not_realizable);
  opt.cutoff = 0.5;
  EXPECT_TRUE(parse_measure(cli::inverse(R"({"side":"right","entries":[{"lambda":1,"gamma2":1}]})", opt).text).empty());
}

TEST(Cli, EvolveAndSample) {
  cli::Options opt;
  const std::string peakon = R"({"atoms":[{"x":0,"w":2}]})";
  EXPECT_EQ(kind_of([&] { cli::evolve(peakon, opt); }), ErrorKind::invalid_argument);
  opt.times = {3.0};
  const auto moved = parse_measure(cli::evolve(peakon, opt).text);
  EXPECT_NEAR(moved[0].x, 3.0, 1e-12);
  opt.times = {0.0, 1.0};
  EXPECT_NE(cli::evolve(peakon, opt).text.find("frames"), std::string::npos);

  cli::Options s;
  s.grid = cli::parse_grid("-1:1:3");
  const auto rows = lines(cli::sample_u(peakon, s).text);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "t,x,u,u_three_spectra");
  EXPECT_EQ(rows[2].substr(0, 8), "0,0,1,1");
  const auto empty = lines(cli::sample_u(R"({"atoms":[]})", s).text);
  EXPECT_EQ(empty[1], "0,-1,0,0");
}

TEST(Cli, VerifyReports) {
  cli::Options opt;
  EXPECT_EQ(cli::verify(R"({"atoms":[]})", opt).exit_code, 0);
  const auto signed_two = cli::verify(R"({"atoms":[{"x":-0.6931471805599453,"w":-1},{"x":0.6931471805599453,"w":2}]})", opt);
  EXPECT_EQ(signed_two.exit_code, 0) << signed_two.text;
  EXPECT_NE(signed_two.text.find("margin_above"), std::string::npos);

  std::mt19937 rng(63);
  for (int k = 0; k < 5; ++k) {
    const auto omega = oracle::random_measure(rng, 2 + k, oracle::Sign::positive);
    const auto report = verify(omega);
    for (const auto& r : report.residuals) EXPECT_TRUE(r.pass) << r.name << " " << r.value << " " << r.tolerance;
  }
  opt.tol = 0.0;
  EXPECT_EQ(cli::verify(R"({"atoms":[{"x":0,"w":1},{"x":1.5,"w":0.5}]})", opt).exit_code, 3);
}

TEST(Cli, Asymptotics) {
  cli::Options opt;
  opt.times = {10.0};
  opt.offsets = {0.0};
  const auto out = cli::asymptotics(R"({"atoms":[{"x":0,"w":1},{"x":1,"w":0.5}]})", opt);
  const auto rows = lines(out.text);
  EXPECT_EQ(rows[0], "t,lambda,x0,x,kernel_integral,profile,abs_diff");
  EXPECT_EQ(rows.size(), 3u);
  opt.format = cli::Format::json;
  EXPECT_NE(cli::asymptotics(R"({"atoms":[{"x":0,"w":1}]})", opt).text.find("phase_shifts"), std::string::npos);
  EXPECT_EQ(kind_of([&] { cli::asymptotics(R"({"atoms":[{"x":0,"w":1},{"x":1,"w":-0.5}]})", opt); }),
            ErrorKind::indefinite_not_supported);
}
