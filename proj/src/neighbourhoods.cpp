#include "mofs/neighbourhoods.hpp"

#include <charconv>

#include "mofs/errors.hpp"

namespace mofs {

std::string to_string(const OperatorSpec& spec) {
  switch (spec.family) {
    case OperatorFamily::Exchange: return std::to_string(spec.k) + "-EX";
    case OperatorFamily::ForwardShift: return std::to_string(spec.k) + "-FSH";
    case OperatorFamily::BackwardShift: return std::to_string(spec.k) + "-BSH";
    case OperatorFamily::Inversion: return "INV";
  }
  return "?";
}

OperatorSpec parse_operator(std::string_view text) {
  if (text == "INV") return {OperatorFamily::Inversion, 1};
  const auto dash = text.find('-');
  std::size_t k = 0;
  if (dash != std::string_view::npos) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + dash, k);
    if (ec == std::errc() && ptr == text.data() + dash && k >= 1) {
      const auto family = text.substr(dash + 1);
      if (family == "EX") return {OperatorFamily::Exchange, k};
      if (family == "FSH") return {OperatorFamily::ForwardShift, k};
      if (family == "BSH") return {OperatorFamily::BackwardShift, k};
    }
  }
  throw LookupError("unknown operator '" + std::string(text) + "' (expected k-EX, k-FSH, k-BSH or INV)");
}

bool admissible(const OperatorSpec& spec, std::size_t n) noexcept {
  if (spec.k == 0) return false;
  if (n <= 1) return true;
  switch (spec.family) {
    case OperatorFamily::Exchange: return 2 * spec.k <= n;
    case OperatorFamily::ForwardShift:
    case OperatorFamily::BackwardShift: return spec.k + 1 <= n;
    case OperatorFamily::Inversion: return true;
  }
  return false;
}

std::size_t neighbourhood_size(const OperatorSpec& spec, std::size_t n) noexcept {
  const std::size_t k = spec.k;
  switch (spec.family) {
    case OperatorFamily::Exchange:
      if (k == 0 || n < 2 * k) return 0;
      return (n - 2 * k + 1) * (n - 2 * k + 2) / 2;
    case OperatorFamily::ForwardShift:
    case OperatorFamily::BackwardShift:
      if (k == 0 || n <= k) return 0;
      return (n - k) * (n - k + 1) / 2;
    case OperatorFamily::Inversion:
      return n < 2 ? 0 : n * (n - 1) / 2;
  }
  return 0;
}

std::vector<Permutation> exchange_neighbourhood(const Permutation& pi, std::size_t k) {
  std::vector<Permutation> out;
  const std::size_t n = pi.size();
  if (k == 0 || n < 2 * k) return out;
  out.reserve(neighbourhood_size({OperatorFamily::Exchange, k}, n));
  for (std::size_t j = 0; j + 2 * k <= n; ++j) {
    for (std::size_t l = j + k; l + k <= n; ++l) {
      out.push_back(pi);
      out.back().swap_blocks(j, l, k);
    }
  }
  return out;
}

std::vector<Permutation> forward_shift_neighbourhood(const Permutation& pi, std::size_t k) {
  std::vector<Permutation> out;
  const std::size_t n = pi.size();
  if (k == 0 || n <= k) return out;
  out.reserve(neighbourhood_size({OperatorFamily::ForwardShift, k}, n));
  for (std::size_t j = 0; j + k < n; ++j) {
    for (std::size_t to = j + 1; to + k <= n; ++to) {
      out.push_back(pi);
      out.back().rotate(j, j + k, to + k);
    }
  }
  return out;
}

std::vector<Permutation> backward_shift_neighbourhood(const Permutation& pi, std::size_t k) {
  std::vector<Permutation> out;
  const std::size_t n = pi.size();
  if (k == 0 || n <= k) return out;
  out.reserve(neighbourhood_size({OperatorFamily::BackwardShift, k}, n));
  for (std::size_t j = 1; j + k <= n; ++j) {
    for (std::size_t to = 0; to < j; ++to) {
      out.push_back(pi);
      out.back().rotate(to, j, j + k);
    }
  }
  return out;
}

std::vector<Permutation> inversion_neighbourhood(const Permutation& pi) {
  std::vector<Permutation> out;
  const std::size_t n = pi.size();
  if (n < 2) return out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t first = 0; first + 1 < n; ++first) {
    for (std::size_t last = first + 2; last <= n; ++last) {
      out.push_back(pi);
      out.back().reverse(first, last);
    }
  }
  return out;
}

std::vector<Permutation> generate(const OperatorSpec& spec, const Permutation& pi) {
  if (spec.k == 0) throw InvalidArgument("operator block length must be >= 1");
  switch (spec.family) {
    case OperatorFamily::Exchange: return exchange_neighbourhood(pi, spec.k);
    case OperatorFamily::ForwardShift: return forward_shift_neighbourhood(pi, spec.k);
    case OperatorFamily::BackwardShift: return backward_shift_neighbourhood(pi, spec.k);
    case OperatorFamily::Inversion: return inversion_neighbourhood(pi);
  }
  throw InvalidArgument("unknown operator family");
}

std::vector<OperatorSpec> all_nine_operators() {
  std::vector<OperatorSpec> ops;
  for (auto family : {OperatorFamily::BackwardShift, OperatorFamily::ForwardShift, OperatorFamily::Exchange})
    for (std::size_t k = 1; k <= 3; ++k) ops.push_back({family, k});
  return ops;
}

std::vector<OperatorSpec> unit_operators() {
  return {{OperatorFamily::BackwardShift, 1}, {OperatorFamily::ForwardShift, 1}, {OperatorFamily::Exchange, 1}};
}

}  // namespace mofs
