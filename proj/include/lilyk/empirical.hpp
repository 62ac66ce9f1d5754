#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lilyk {

/// Nonnegative rational with an explicit infinity (used for |D|/|A| when A is empty).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool infinite = false;

  static Rational of(std::int64_t n, std::int64_t d);
  static Rational infinity() { return Rational{0, 1, true}; }

  double to_double() const;
  std::string str() const;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.infinite == b.infinite && (a.infinite || (a.num == b.num && a.den == b.den));
  }
  friend bool operator<(const Rational& a, const Rational& b);
};

struct Measurement {
  std::string name;
  Rational value;
  std::string instance;
};

class EmpiricalConstants {
 public:
  void record(std::string name, Rational value, std::string instance);
  const std::vector<Measurement>& measurements() const { return items_; }
  /// Largest value recorded under `name`, if any.
  std::optional<Rational> max(std::string_view name) const;
  std::size_t count(std::string_view name) const;
  /// One `name instance value` line per measurement.
  std::string report() const;
  void clear() { items_.clear(); }

 private:
  std::vector<Measurement> items_;
};

/// Routes record_measurement() calls on this thread into `sink` while alive.
class MeasurementScope {
 public:
  MeasurementScope(EmpiricalConstants& sink, std::string instance);
  ~MeasurementScope();
  MeasurementScope(const MeasurementScope&) = delete;
  MeasurementScope& operator=(const MeasurementScope&) = delete;

 private:
  EmpiricalConstants* prev_sink_;
  std::string prev_instance_;
};

/// No-op unless a MeasurementScope is active on this thread.
void record_measurement(std::string_view name, Rational value);

}  // namespace lilyk
