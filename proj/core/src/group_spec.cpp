#include "pcg/group_spec.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace pcg::groups {

using numtheory::Nat;

namespace {

struct KindName {
  SpecKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {SpecKind::Cyclic, "cyclic"}, {SpecKind::Dihedral, "dihedral"}, {SpecKind::Sym, "sym"},
    {SpecKind::Alt, "alt"},       {SpecKind::Heis3, "heis3"},       {SpecKind::Heis3C2, "heis3_c2"},
    {SpecKind::M11, "m11"},       {SpecKind::Psl2, "psl2"},         {SpecKind::Psl3, "psl3"},
    {SpecKind::Sl3, "sl3"},       {SpecKind::DirectProduct, "dp"},  {SpecKind::Semidirect, "sd"},
};

std::string_view kind_name(SpecKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i])) != 0) continue;
      chars_.push_back(text[i]);
      positions_.push_back(i);
    }
    end_position_ = text.size();
  }

  GroupSpec parse_all() {
    GroupSpec spec = parse_term();
    if (cursor_ != chars_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, cursor_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t cursor) const {
    throw ParseError(what, cursor < positions_.size() ? positions_[cursor] : end_position_);
  }

  bool at_end() const { return cursor_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[cursor_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++cursor_;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) != 0 ||
                         std::isdigit(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
      out.push_back(chars_[cursor_++]);
    }
    return out;
  }

  std::uint64_t number() {
    const std::size_t start = cursor_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail_at("parameter overflows 64 bits", start);
      value = value * 10 + digit;
      ++cursor_;
    }
    if (cursor_ == start) fail("expected a decimal parameter");
    return value;
  }

  GroupSpec parse_term() {
    const std::size_t start = cursor_;
    const std::string name = identifier();
    if (name.empty()) fail("expected a group constructor");
    GroupSpec spec;
    bool known = false;
    for (const auto& kn : kKindNames) {
      if (kn.name == name) {
        spec.kind = kn.kind;
        known = true;
      }
    }
    if (!known) fail_at("unknown constructor '" + name + "'", start);

    switch (spec.kind) {
      case SpecKind::Heis3:
      case SpecKind::M11:
        break;
      case SpecKind::DirectProduct:
        expect('(');
        spec.factors.push_back(parse_term());
        expect(',');
        spec.factors.push_back(parse_term());
        expect(')');
        break;
      case SpecKind::Semidirect:
        expect('(');
        spec.params.push_back(number());
        expect(',');
        spec.params.push_back(number());
        expect(',');
        spec.params.push_back(number());
        expect(')');
        break;
      default:
        if (peek() != ':') fail("constructor '" + name + "' takes one parameter (" + name + ":N)");
        ++cursor_;
        spec.params.push_back(number());
        break;
    }
    validate(spec, start);
    return spec;
  }

  void validate(const GroupSpec& spec, std::size_t start) const {
    auto bad = [&](const std::string& why) { fail_at(why, start); };
    switch (spec.kind) {
      case SpecKind::Cyclic:
      case SpecKind::Sym:
      case SpecKind::Alt:
        if (spec.params[0] < 1) bad(std::string(kind_name(spec.kind)) + " requires N >= 1");
        break;
      case SpecKind::Dihedral:
        if (spec.params[0] < 2) bad("dihedral requires M >= 2");
        break;
      case SpecKind::Heis3C2:
        if (spec.params[0] >= heis3_involutions().size()) {
          bad("heis3_c2 index must be below " + std::to_string(heis3_involutions().size()));
        }
        break;
      case SpecKind::Psl2:
      case SpecKind::Psl3:
      case SpecKind::Sl3:
        if (spec.params[0] < 2 || spec.params[0] > (1U << 16)) bad("field size must lie in [2, 65536]");
        try {
          (void)prime_power_parts(spec.params[0]);
        } catch (const std::invalid_argument& e) {
          bad(e.what());
        }
        break;
      case SpecKind::Semidirect: {
        const auto p = spec.params[0];
        const auto n = spec.params[1];
        const auto k = spec.params[2];
        if (!numtheory::is_prime_u64(p)) bad("sd requires P prime");
        if (n < 1 || (p - 1) % n != 0) bad("sd requires N to divide P-1");
        if (k % p == 0) bad("sd requires K coprime to P");
        const auto ord = numtheory::multiplicative_order_mod_prime(k, p);
        if (ord != n) {
          bad("sd requires K of multiplicative order N mod P; " + std::to_string(k) + " has order " +
              std::to_string(ord) + " mod " + std::to_string(p));
        }
        break;
      }
      default:
        break;
    }
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t cursor_ = 0;
};

Nat factorial(std::uint64_t n) {
  Nat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  out << kind_name(kind);
  switch (kind) {
    case SpecKind::Heis3:
    case SpecKind::M11:
      break;
    case SpecKind::DirectProduct:
      out << '(' << factors[0].to_string() << ',' << factors[1].to_string() << ')';
      break;
    case SpecKind::Semidirect:
      out << '(' << params[0] << ',' << params[1] << ',' << params[2] << ')';
      break;
    default:
      out << ':' << params[0];
      break;
  }
  return out.str();
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse_all(); }

std::pair<std::uint32_t, unsigned> prime_power_parts(std::uint64_t q) {
  const auto primes = numtheory::prime_divisors_u64(q);
  if (q < 2 || primes.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  unsigned k = 0;
  for (std::uint64_t m = q; m > 1; m /= primes[0]) ++k;
  return {static_cast<std::uint32_t>(primes[0]), k};
}

Nat expected_order(const GroupSpec& spec) {
  auto nat = [](std::uint64_t v) { return Nat(std::to_string(v)); };
  switch (spec.kind) {
    case SpecKind::Cyclic:
      return nat(spec.params[0]);
    case SpecKind::Dihedral:
      return 2 * nat(spec.params[0]);
    case SpecKind::Sym:
      return factorial(spec.params[0]);
    case SpecKind::Alt:
      return spec.params[0] < 2 ? Nat(1) : Nat(factorial(spec.params[0]) / 2);
    case SpecKind::Heis3:
      return 27;
    case SpecKind::Heis3C2:
      return 54;
    case SpecKind::M11:
      return 7920;
    case SpecKind::Psl2: {
      const Nat q = nat(spec.params[0]);
      Nat out = q * (q - 1) * (q + 1);
      return spec.params[0] % 2 == 0 ? out : Nat(out / 2);
    }
    case SpecKind::Psl3:
    case SpecKind::Sl3: {
      const Nat q = nat(spec.params[0]);
      Nat out = q * q * q * (q * q * q - 1) * (q * q - 1);
      if (spec.kind == SpecKind::Psl3 && spec.params[0] % 3 == 1) out /= 3;
      return out;
    }
    case SpecKind::DirectProduct:
      return expected_order(spec.factors[0]) * expected_order(spec.factors[1]);
    case SpecKind::Semidirect:
      return nat(spec.params[0]) * nat(spec.params[1]);
  }
  return 0;
}

}  // namespace pcg::groups
