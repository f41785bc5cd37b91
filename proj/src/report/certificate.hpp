#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "certnum/interval.hpp"
#include "certnum/rational.hpp"

namespace extremal::report {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { certified, failed, incomplete, diagnostic };

const char* status_name(Status s);

// Machine-checkable record of one claim. Serializes to canonical JSON:
// sorted keys, every numeric tagged with its representation kind, rationals
// as "p/q" strings, interval endpoints as shortest round-trip decimal
// strings of the outward-rounded doubles.
class Certificate {
public:
  explicit Certificate(std::string claim_id);

  void input(const std::string& name, const std::string& value);
  void input_rational(const std::string& name, const certnum::Rational& value);
  void input_int(const std::string& name, long long value);

  void output_rational(const std::string& name, const certnum::Rational& value);
  void output_interval(const std::string& name, const certnum::Interval& value);
  void output_float(const std::string& name, double value);
  void output_int(const std::string& name, long long value);
  void output_big(const std::string& name, const certnum::BigInt& value);
  void output_text(const std::string& name, const std::string& value);
  void output_bool(const std::string& name, bool value);

  void set_status(Status s) { status_ = s; }
  Status status() const { return status_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_wall_time_ms(std::int64_t ms) { wall_time_ms_ = ms; }

  // 0 = certified or diagnostic, 2 = failed or incomplete
  int exit_code() const;

  std::string to_json() const;
  const std::string& claim_id() const { return claim_id_; }

private:
  struct Output {
    std::string kind;
    std::string value;       // scalar representation
    std::string value_hi;    // second endpoint for intervals
  };

  std::string claim_id_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, Output> outputs_;
  Status status_ = Status::diagnostic;
  std::optional<std::uint64_t> seed_;
  std::int64_t wall_time_ms_ = 0;
};

// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double v);

// Claim-to-theorem map with certification semantics, one entry per line.
std::string manifest_text();

}  // namespace extremal::report
