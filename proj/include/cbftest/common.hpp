#ifndef CBFTEST_COMMON_HPP
#define CBFTEST_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace cbftest {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using RowVec = Eigen::RowVectorXd;

// Value reported for an infeasible maximization (and its negation for an
// infeasible minimization). Reserved: compared against, never summed with
// finite costs.
inline constexpr double kInfeasibleMax = -std::numeric_limits<double>::max();
inline constexpr double kInfeasibleMin = std::numeric_limits<double>::max();

inline bool is_infeasible_value(double s) { return s <= kInfeasibleMax; }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct IntegrationDivergenceError : Error {
  using Error::Error;
};
struct SingularGradientError : Error {
  using Error::Error;
};
struct NotApplicableError : Error {
  using Error::Error;
};
struct InfeasibleControllerError : Error {
  using Error::Error;
};
struct EstimationInfeasibleError : Error {
  using Error::Error;
};
struct NoFeasibleTestError : Error {
  using Error::Error;
};
struct MalformedTraceError : Error {
  using Error::Error;
};
struct MalformedRecordError : Error {
  using Error::Error;
};
struct ScenarioTooHardError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

/// Deterministic uniform generator. The raw engine is std::mt19937_64 but all
/// real-valued draws go through a fixed 53-bit mapping, so streams do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for an indexed substream (per-episode, per-demo, ...) of one master
/// seed. SplitMix64 finalizer; avoids correlated mt19937 seedings.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

}  // namespace cbftest

#endif  // CBFTEST_COMMON_HPP
