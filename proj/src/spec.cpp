#include "burnside/spec.hpp"

#include <cctype>
#include <climits>
#include <set>

#include "burnside/families.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

SpecError::SpecError(std::size_t offset, const std::string& what)
    : std::invalid_argument("syntax error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).substr(0, s.size()) == s; }

  [[noreturn]] void fail(const std::string& what) const { throw SpecError(pos_, what); }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect(std::string_view s) {
    if (!starts_with(s))
      fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  /// A nonnegative decimal integer without leading zeros.
  int integer() {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT_MAX)
        throw SpecError(start, "integer too large");
      ++pos_;
    }
    if (pos_ - start > 1 && text_[start] == '0')
      throw SpecError(start, "leading zero");
    return static_cast<int>(v);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GroupSpec parse_atom(Cursor& c) {
  GroupSpec s;
  if (c.starts_with("perm:")) {
    c.expect("perm:");
    const std::size_t deg_at = c.pos();
    s.kind = GroupSpec::Kind::perm;
    s.degree = c.integer();
    if (s.degree < 1)
      throw SpecError(deg_at, "degree must be positive");
    c.expect(':');
    c.expect('[');
    do {
      std::vector<std::vector<int>> gen;
      std::set<int> used;
      if (c.starts_with("()")) {
        c.expect("()");
      } else {
        do {
          c.expect('(');
          std::vector<int> cycle;
          do {
            const std::size_t at = c.pos();
            int p = c.integer();
            if (p >= s.degree)
              throw SpecError(at, "point out of range");
            if (!used.insert(p).second)
              throw SpecError(at, "point repeated in a generator");
            cycle.push_back(p);
          } while (c.accept(' '));
          c.expect(')');
          gen.push_back(std::move(cycle));
        } while (c.peek() == '(');
      }
      s.generators.push_back(std::move(gen));
    } while (c.accept(';'));
    c.expect(']');
    return s;
  }
  if (c.starts_with("Q8")) {
    c.expect("Q8");
    s.kind = GroupSpec::Kind::quaternion;
    s.n = 8;
    return s;
  }
  switch (c.peek()) {
    case 'C': s.kind = GroupSpec::Kind::cyclic; break;
    case 'D': s.kind = GroupSpec::Kind::dihedral; break;
    case 'S': s.kind = GroupSpec::Kind::symmetric; break;
    case 'A': s.kind = GroupSpec::Kind::alternating; break;
    default: c.fail("expected a group name (C, D, S, A, Q8 or perm:)");
  }
  c.expect(c.peek());
  const std::size_t at = c.pos();
  s.n = c.integer();
  if (s.n < 1)
    throw SpecError(at, "family index must be positive");
  return s;
}

char family_letter(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::cyclic: return 'C';
    case GroupSpec::Kind::dihedral: return 'D';
    case GroupSpec::Kind::symmetric: return 'S';
    case GroupSpec::Kind::alternating: return 'A';
    default: return '?';
  }
}

GSetSpec parse_gset(Cursor& c) {
  GSetSpec s;
  if (c.starts_with("point")) {
    c.expect("point");
    s.kind = GSetSpec::Kind::point;
  } else if (c.starts_with("regular")) {
    c.expect("regular");
    s.kind = GSetSpec::Kind::regular;
  } else if (c.starts_with("empty")) {
    c.expect("empty");
    s.kind = GSetSpec::Kind::empty;
  } else if (c.starts_with("cosets:")) {
    c.expect("cosets:");
    s.kind = GSetSpec::Kind::cosets;
    s.class_id = c.integer();
  } else if (c.starts_with("union(")) {
    c.expect("union(");
    s.kind = GSetSpec::Kind::disjoint_union;
    do
      s.parts.push_back(parse_gset(c));
    while (c.accept(','));
    c.expect(')');
  } else {
    c.fail("expected point, regular, empty, cosets:<id> or union(...)");
  }
  return s;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  Cursor c(text);
  GroupSpec s = parse_atom(c);
  while (c.accept('x')) {
    GroupSpec p;
    p.kind = GroupSpec::Kind::product;
    p.left = std::make_shared<const GroupSpec>(std::move(s));
    p.right = std::make_shared<const GroupSpec>(parse_atom(c));
    s = std::move(p);
  }
  if (!c.done())
    c.fail("unexpected character");
  return s;
}

std::string print(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::quaternion: return "Q8";
    case GroupSpec::Kind::product: return print(*spec.left) + "x" + print(*spec.right);
    case GroupSpec::Kind::perm: {
      std::string out = "perm:" + std::to_string(spec.degree) + ":[";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (i)
          out += ';';
        if (spec.generators[i].empty())
          out += "()";
        for (const auto& cycle : spec.generators[i]) {
          out += '(';
          for (std::size_t j = 0; j < cycle.size(); ++j)
            out += (j ? " " : "") + std::to_string(cycle[j]);
          out += ')';
        }
      }
      return out + "]";
    }
    default: return family_letter(spec.kind) + std::to_string(spec.n);
  }
}

GroupPtr build_group(const GroupSpec& spec, std::size_t cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return families::cyclic(spec.n, cap);
    case GroupSpec::Kind::dihedral: return families::dihedral(spec.n, cap);
    case GroupSpec::Kind::symmetric: return families::symmetric(spec.n, cap);
    case GroupSpec::Kind::alternating: return families::alternating(spec.n, cap);
    case GroupSpec::Kind::quaternion: return families::quaternion(cap);
    case GroupSpec::Kind::product:
      return direct_product(*build_group(*spec.left, cap), *build_group(*spec.right, cap), cap);
    case GroupSpec::Kind::perm: {
      std::vector<Perm> gens;
      for (const auto& g : spec.generators)
        gens.push_back(Perm::from_cycles(spec.degree, g));
      return generate_group(spec.degree, gens, cap);
    }
  }
  throw std::logic_error("unknown group spec kind");
}

GSetSpec parse_gset_spec(std::string_view text) {
  Cursor c(text);
  GSetSpec s = parse_gset(c);
  if (!c.done())
    c.fail("unexpected character");
  return s;
}

std::string print(const GSetSpec& spec) {
  switch (spec.kind) {
    case GSetSpec::Kind::point: return "point";
    case GSetSpec::Kind::regular: return "regular";
    case GSetSpec::Kind::empty: return "empty";
    case GSetSpec::Kind::cosets: return "cosets:" + std::to_string(spec.class_id);
    case GSetSpec::Kind::disjoint_union: {
      std::string out = "union(";
      for (std::size_t i = 0; i < spec.parts.size(); ++i)
        out += (i ? "," : "") + print(spec.parts[i]);
      return out + ")";
    }
  }
  return {};
}

GSet build_gset(const GSetSpec& spec, const GroupPtr& g) {
  switch (spec.kind) {
    case GSetSpec::Kind::point: return GSet::point(g);
    case GSetSpec::Kind::regular: return GSet::regular(g);
    case GSetSpec::Kind::empty: return GSet::empty(g);
    case GSetSpec::Kind::cosets: {
      const auto& lat = lattice_of(g);
      if (spec.class_id < 0 || static_cast<std::size_t>(spec.class_id) >= lat.size())
        throw std::invalid_argument("no subgroup class " + std::to_string(spec.class_id) + " (group has " +
                                    std::to_string(lat.size()) + ")");
      return GSet::cosets(lat[spec.class_id].representative);
    }
    case GSetSpec::Kind::disjoint_union: {
      std::vector<GSet> parts;
      for (const auto& p : spec.parts)
        parts.push_back(build_gset(p, g));
      return GSet::disjoint_union(parts);
    }
  }
  throw std::logic_error("unknown G-set spec kind");
}

}  // namespace burnside
