#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

// Exact rational scalar used for all symbolic work. Floats appear only when a
// polynomial or map is finally evaluated at a numeric point.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

// Parses "p", "-p" or "p/q" with arbitrary precision; rejects anything else.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// Error categories; the CLI maps them onto its exit-code contract.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PropertyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Counter-based RNG ("sm64ctr-v1").
//
// Every draw is a pure function of (seed, stream, counter), so sampling is
// reproducible independently of thread scheduling. Streams separate logical
// uses (one per module/task); counters index the draws.
// ---------------------------------------------------------------------------

std::uint64_t mix64(std::uint64_t x);
std::uint64_t stream_id(const std::string& name);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}
  CounterRng(std::uint64_t seed, const std::string& stream)
      : CounterRng(seed, stream_id(stream)) {}

  std::uint64_t bits(std::uint64_t counter) const;
  // Uniform on [0,1).
  double uniform(std::uint64_t counter) const;
  // Uniform on [lo,hi).
  double uniform(std::uint64_t counter, double lo, double hi) const;
  // Standard normal; consumes the counter pair (2c, 2c+1).
  double normal(std::uint64_t counter) const;

  CounterRng substream(std::uint64_t k) const {
    return CounterRng(seed_, mix64(stream_ ^ (0x9e3779b97f4a7c15ull + k)));
  }

  static constexpr const char* kName = "sm64ctr-v1";

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// ---------------------------------------------------------------------------
// Deterministic parallelism. Work is split into a fixed chunk grid whose
// layout does not depend on the worker count, so results (stored per index by
// the body) are identical for any thread count.
// ---------------------------------------------------------------------------

void set_max_threads(int n);
int max_threads();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Sums f(0..n-1) with a fixed pairwise reduction order.
double parallel_sum(std::size_t n,
                    const std::function<double(std::size_t)>& term);

// Pairwise summation of a vector (deterministic, improved conditioning).
double pairwise_sum(const std::vector<double>& v);

// Ordinary least squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

double median(std::vector<double> v);

}  // namespace hk
