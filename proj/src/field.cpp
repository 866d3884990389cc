#include "bisect/field.hpp"

namespace bisect {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::IsotropicLine: return "IsotropicLine";
    case ErrorCode::InvalidCirclePair: return "InvalidCirclePair";
    case ErrorCode::InvalidQuadruple: return "InvalidQuadruple";
    case ErrorCode::InvalidKind: return "InvalidKind";
    case ErrorCode::InvalidDistance: return "InvalidDistance";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ConstructionError: return "ConstructionError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ConvergenceError: return "ConvergenceError";
  }
  return "UnknownError";
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p > 0x7FFFFFFFu || !is_prime(p)) {
    fail(ErrorCode::InvalidInput, "modulus must be an odd prime in [3, 2^31 - 1], got " + std::to_string(p));
  }
  if (p_ % 4 == 1) {
    sqrt_minus_one_ = sqrt(Fe{p_ - 1});
  }
}

Fe PrimeField::pow(Fe a, std::uint64_t e) const {
  std::uint64_t base = a.v;
  std::uint64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Fe{static_cast<std::uint32_t>(acc)};
}

Fe PrimeField::inverse(Fe a) const {
  if (a.v == 0) fail(ErrorCode::ZeroInverse, "inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Fe PrimeField::half(Fe a) const {
  // (a + p)/2 when a is odd keeps everything in integers.
  return a.v % 2 == 0 ? Fe{a.v / 2} : Fe{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v) + p_) / 2)};
}

bool PrimeField::is_square(Fe a) const {
  if (a.v == 0) return true;
  return pow(a, (p_ - 1) / 2).v == 1;
}

namespace {

// Tonelli-Shanks for odd prime p; a assumed to be a nonzero residue.
std::uint32_t tonelli_shanks(const PrimeField& F, Fe a) {
  const std::uint32_t p = F.p();
  if (p % 4 == 3) {
    return F.pow(a, (static_cast<std::uint64_t>(p) + 1) / 4).v;
  }
  std::uint32_t s = 0;
  std::uint64_t q = p - 1;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  // Find a quadratic non-residue z.
  Fe z{2};
  while (F.is_square(z)) z.v += 1;
  Fe c = F.pow(z, q);
  Fe x = F.pow(a, (q + 1) / 2);
  Fe t = F.pow(a, q);
  std::uint32_t m = s;
  while (t.v != 1) {
    std::uint32_t i = 0;
    Fe tt = t;
    while (tt.v != 1) {
      tt = F.square(tt);
      ++i;
    }
    Fe b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = F.square(b);
    x = F.mul(x, b);
    c = F.square(b);
    t = F.mul(t, c);
    m = i;
  }
  return x.v;
}

}  // namespace

std::optional<Fe> PrimeField::sqrt(Fe a) const {
  if (a.v == 0) return Fe{0};
  if (!is_square(a)) return std::nullopt;
  std::uint32_t r;
  if (p_ < 10000) {
    r = 0;
    for (std::uint32_t t = 1; t < p_; ++t) {
      if (static_cast<std::uint64_t>(t) * t % p_ == a.v) {
        r = t;
        break;
      }
    }
  } else {
    r = tonelli_shanks(*this, a);
  }
  // Canonical root: the smaller of {r, p - r}.
  std::uint32_t other = p_ - r;
  return Fe{r < other ? r : other};
}

}  // namespace bisect
