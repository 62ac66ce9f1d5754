#include "lilyk/empirical.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lilyk {

namespace {
thread_local EmpiricalConstants* current_sink = nullptr;
thread_local std::string current_instance;
}  // namespace

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) return n == 0 ? Rational{} : infinity();
  if (n < 0 || d < 0) throw std::invalid_argument("Rational: negative value");
  auto g = std::gcd(n, d);
  if (g == 0) g = 1;
  return Rational{n / g, d / g, false};
}

double Rational::to_double() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
  if (infinite) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

void EmpiricalConstants::record(std::string name, Rational value, std::string instance) {
  items_.push_back({std::move(name), value, std::move(instance)});
}

std::optional<Rational> EmpiricalConstants::max(std::string_view name) const {
  std::optional<Rational> best;
  for (const auto& m : items_)
    if (m.name == name && (!best || *best < m.value)) best = m.value;
  return best;
}

std::size_t EmpiricalConstants::count(std::string_view name) const {
  std::size_t n = 0;
  for (const auto& m : items_) n += m.name == name;
  return n;
}

std::string EmpiricalConstants::report() const {
  std::ostringstream out;
  for (const auto& m : items_)
    out << m.name << ' ' << (m.instance.empty() ? "-" : m.instance) << ' ' << m.value.str()
        << '\n';
  return out.str();
}

MeasurementScope::MeasurementScope(EmpiricalConstants& sink, std::string instance)
    : prev_sink_(current_sink), prev_instance_(std::move(current_instance)) {
  current_sink = &sink;
  current_instance = std::move(instance);
}

MeasurementScope::~MeasurementScope() {
  current_sink = prev_sink_;
  current_instance = std::move(prev_instance_);
}

void record_measurement(std::string_view name, Rational value) {
  if (current_sink) current_sink->record(std::string(name), value, current_instance);
}

}  // namespace lilyk
