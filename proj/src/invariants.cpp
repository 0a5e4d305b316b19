#include "p4bound/invariants.hpp"

#include "p4bound/binomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace p4bound {

ConnectedInvariants::ConnectedInvariants(std::vector<std::int64_t> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw std::invalid_argument("connected invariants: empty sequence");
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (lambda_[i] <= 0) throw std::invalid_argument("connected invariants: non-positive part in " + to_string());
    if (i > 0 && lambda_[i] >= lambda_[i - 1]) {
      throw std::invalid_argument("connected invariants: not strictly decreasing: " + to_string());
    }
    d_ += lambda_[i];
  }
}

// lambda_i <= d/s + c  <=>  s * lambda_i <= d + s * c, exact in integers.
bool ConnectedInvariants::satisfies_caps() const noexcept {
  const std::int64_t s = static_cast<std::int64_t>(lambda_.size());
  if (s * lambda_[0] > d_ + s * (s - 1)) return false;
  if (s >= 2 && s * lambda_[1] > d_ + s * (s - 2)) return false;
  return true;
}

bool ConnectedInvariants::is_gap_free() const noexcept {
  for (std::size_t i = 0; i + 1 < lambda_.size(); ++i) {
    if (lambda_[i] - lambda_[i + 1] > 2) return false;
  }
  return true;
}

std::string ConnectedInvariants::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < lambda_.size(); ++i) os << (i ? "," : "") << lambda_[i];
  os << ")";
  return os.str();
}

ConnectedInvariants ConnectedInvariants::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<std::int64_t> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad invariant sequence: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ConnectedInvariants(std::move(parts));
}

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::unrestricted: return "none";
    case Connectivity::lambda_caps: return "caps";
    case Connectivity::gap_free: return "gap-free";
  }
  return "?";
}

Connectivity parse_connectivity(std::string_view text) {
  if (text == "none") return Connectivity::unrestricted;
  if (text == "caps") return Connectivity::lambda_caps;
  if (text == "gap-free") return Connectivity::gap_free;
  throw std::invalid_argument("unknown connectivity '" + std::string(text) + "'");
}

namespace {

class Enumerator {
 public:
  Enumerator(const EnumerationConstraints& c, const std::function<void(const ConnectedInvariants&)>& visit)
      : c_(c), visit_(visit) {
    prefix_.reserve(static_cast<std::size_t>(c.s));
  }

  void run() {
    if (c_.d < 1 || c_.s < 1) return;
    descend(c_.d, c_.d);
  }

 private:
  // Largest value allowed at the next position before the sum constraints.
  std::int64_t cap_for(std::size_t position) const {
    const std::int64_t s = c_.s;
    if (c_.connectivity == Connectivity::unrestricted) return c_.d;
    // floor((d + s*c) / s) for the rational cap d/s + c; d, s > 0 so the
    // numerator is positive.
    if (position == 0) return (c_.d + s * (s - 1)) / s;
    if (position == 1) return (c_.d + s * (s - 2)) / s;
    return c_.d;
  }

  void descend(std::int64_t remaining, std::int64_t upper) {
    const std::size_t position = prefix_.size();
    const std::int64_t k = c_.s - static_cast<std::int64_t>(position) - 1;  // parts still to place after this one
    if (k < 0) {
      if (remaining == 0) visit_(ConnectedInvariants(prefix_));
      return;
    }
    std::int64_t hi = std::min({upper, cap_for(position), remaining - k * (k + 1) / 2});
    std::int64_t lo = k + 1;
    if (c_.connectivity == Connectivity::gap_free && position > 0) lo = std::max(lo, prefix_.back() - 2);
    for (std::int64_t v = hi; v >= lo; --v) {
      // The k remaining parts are distinct and below v.
      if (remaining - v > k * v - k * (k + 1) / 2) break;
      prefix_.push_back(v);
      descend(remaining - v, v - 1);
      prefix_.pop_back();
    }
  }

  const EnumerationConstraints& c_;
  const std::function<void(const ConnectedInvariants&)>& visit_;
  std::vector<std::int64_t> prefix_;
};

}  // namespace

void for_each_invariant(const EnumerationConstraints& c,
                        const std::function<void(const ConnectedInvariants&)>& visit) {
  Enumerator(c, visit).run();
}

std::vector<ConnectedInvariants> enumerate_invariants(const EnumerationConstraints& c) {
  std::vector<ConnectedInvariants> out;
  for_each_invariant(c, [&](const ConnectedInvariants& inv) { out.push_back(inv); });
  return out;
}

std::int64_t count_invariants(const EnumerationConstraints& c) {
  std::int64_t n = 0;
  for_each_invariant(c, [&](const ConnectedInvariants&) { ++n; });
  return n;
}

std::int64_t genus_functional(const ConnectedInvariants& inv) {
  Rational total(1);
  std::int64_t i = 0;
  for (std::int64_t part : inv.lambda()) {
    total += binom_poly2(Rational(part)) + Rational((i - 1) * part);
    ++i;
  }
  return total.to_int64();
}

std::int64_t genus_functional_alt(const ConnectedInvariants& inv) {
  Rational total(0);
  std::int64_t i = 0;
  for (std::int64_t part : inv.lambda()) {
    total += binom_poly2(Rational(part)) + Rational(i * part);
    ++i;
  }
  return total.to_int64();
}

Rational chi_functional(const ConnectedInvariants& inv) {
  Rational total(0);
  std::int64_t t = 0;
  for (std::int64_t part : inv.lambda()) {
    total += binom_poly3(Rational(part + t - 1)) - binom_poly3(Rational(t - 1));
    ++t;
  }
  return total;
}

}  // namespace p4bound
