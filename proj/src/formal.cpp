#include "basket3/formal.hpp"

#include <stdexcept>
#include <string>

namespace basket3 {

namespace {

std::int64_t to_i64(const Rat& q, const char* what) {
  if (denominator(q) != 1) throw std::logic_error(std::string(what) + ": non-integer value");
  return static_cast<std::int64_t>(numerator(q));
}

}  // namespace

std::int64_t ChiVector::at(int m) const {
  if (m < 2 || m > mmax()) throw std::out_of_range("ChiVector::at(" + std::to_string(m) + ")");
  return values[static_cast<std::size_t>(m) - 2];
}

Rat k3(const FormalBasket& fb) {
  return Rat(-sigma(fb.basket)) + sigma_prime(fb.basket) + 6 * fb.chi + 2 * fb.chi2;
}

ChiVector chi_seq(const FormalBasket& fb, int mmax) {
  if (mmax < 3) throw std::invalid_argument("chi_seq: mmax >= 3 required");
  const std::int64_t sig = sigma(fb.basket);
  // K^3 - sigma' = -sigma + 6 chi + 2 chi2, always an integer
  const std::int64_t k3_minus_sp = -sig + 6 * fb.chi + 2 * fb.chi2;
  ChiVector cv;
  cv.chi = fb.chi;
  cv.values.push_back(fb.chi2);
  cv.values.push_back(-sig + 10 * fb.chi + 5 * fb.chi2);
  for (std::int64_t m = 3; m < mmax; ++m) {
    const Rat step = Rat(m * m, 2) * k3_minus_sp + Rat(m, 2) * sig - 2 * fb.chi +
                     delta(fb.basket, m);
    cv.values.push_back(cv.values.back() + to_i64(step, "chi_seq"));
  }
  return cv;
}

std::int64_t chi_closed(const FormalBasket& fb, int m) {
  if (m < 2) throw std::invalid_argument("chi_closed: m >= 2 required");
  const Rat v = Rat(Int(m) * (m - 1) * (2 * m - 1), 12) * k3(fb) - Rat((2 * m - 1)) * fb.chi +
                rr_correction(fb.basket, m);
  return to_i64(v, "chi_closed");
}

}  // namespace basket3
