#include "folner/group.hpp"

#include "folner/finite_set.hpp"

#include <algorithm>
#include <sstream>

namespace folner {

std::int64_t FolnerSchedule::length(int n) const {
  if (n < 0) throw std::invalid_argument("folner index must be >= 0");
  std::int64_t L = 1;
  for (int i = 0; i < n; ++i) {
    if (L > (1ll << 40)) throw ElementRangeError("folner schedule length overflow");
    L *= base;
  }
  return L;
}

// ---------------------------------------------------------------- ZdGroup

ZdGroup::ZdGroup(int d) : d_(d) {
  if (d < 1 || d > 3) throw std::invalid_argument("ZdGroup supports d in {1,2,3}");
}

std::string ZdGroup::name() const {
  return d_ == 1 ? "z" : "z" + std::to_string(d_);
}

GroupElement ZdGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  for (int i = 0; i < d_; ++i) r.coords[i] = a.coords[i] + b.coords[i];
  return r;
}

GroupElement ZdGroup::inverse(const GroupElement& a) const {
  GroupElement r;
  for (int i = 0; i < d_; ++i) r.coords[i] = -a.coords[i];
  return r;
}

std::vector<GroupElement> ZdGroup::generators() const {
  std::vector<GroupElement> gens;
  for (int i = 0; i < d_; ++i) {
    GroupElement g;
    g.coords[i] = 1;
    gens.push_back(g);
    g.coords[i] = -1;
    gens.push_back(g);
  }
  return gens;
}

FiniteSubset ZdGroup::folner_set(int n, const FolnerSchedule& schedule) const {
  const std::int64_t L = schedule.length(n);
  ZdBox b;
  b.d = d_;
  for (int i = 0; i < d_; ++i) {
    b.lo[i] = 0;
    b.hi[i] = L;
  }
  return FiniteSubset::box(*this, b);
}

std::string ZdGroup::format(const GroupElement& g) const {
  std::ostringstream os;
  for (int i = 0; i < d_; ++i) {
    if (i) os << ' ';
    os << g.coords[i];
  }
  return os.str();
}

GroupElement ZdGroup::parse(const std::string& token) const {
  std::istringstream is(token);
  GroupElement g;
  for (int i = 0; i < d_; ++i)
    if (!(is >> g.coords[i])) throw std::invalid_argument("bad Z^d token: " + token);
  return g;
}

GroupElement ZdGroup::at(std::initializer_list<std::int64_t> v) const {
  if (static_cast<int>(v.size()) != d_) throw std::invalid_argument("wrong arity");
  GroupElement g;
  int i = 0;
  for (auto x : v) g.coords[i++] = x;
  return g;
}

// --------------------------------------------------------- HeisenbergGroup

GroupElement HeisenbergGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  r.coords[0] = a.coords[0] + b.coords[0];
  r.coords[1] = a.coords[1] + b.coords[1];
  r.coords[2] = a.coords[2] + b.coords[2] + a.coords[0] * b.coords[1];
  return r;
}

GroupElement HeisenbergGroup::inverse(const GroupElement& a) const {
  GroupElement r;
  r.coords[0] = -a.coords[0];
  r.coords[1] = -a.coords[1];
  r.coords[2] = -a.coords[2] + a.coords[0] * a.coords[1];
  return r;
}

std::vector<GroupElement> HeisenbergGroup::generators() const {
  std::vector<GroupElement> gens(4);
  gens[0].coords[0] = 1;
  gens[1].coords[0] = -1;
  gens[2].coords[1] = 1;
  gens[3].coords[1] = -1;
  return gens;
}

FiniteSubset HeisenbergGroup::folner_set(int n, const FolnerSchedule& schedule) const {
  const std::int64_t L = schedule.length(n);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>((2 * L + 1) * (2 * L + 1) * (2 * L * L + 1)));
  for (std::int64_t a = -L; a <= L; ++a)
    for (std::int64_t b = -L; b <= L; ++b)
      for (std::int64_t c = -L * L; c <= L * L; ++c) {
        GroupElement g;
        g.coords = {a, b, c};
        elems.push_back(g);
      }
  return FiniteSubset(this, std::move(elems));
}

std::string HeisenbergGroup::format(const GroupElement& g) const {
  std::ostringstream os;
  os << g.coords[0] << ' ' << g.coords[1] << ' ' << g.coords[2];
  return os.str();
}

GroupElement HeisenbergGroup::parse(const std::string& token) const {
  std::istringstream is(token);
  GroupElement g;
  if (!(is >> g.coords[0] >> g.coords[1] >> g.coords[2]))
    throw std::invalid_argument("bad Heisenberg token: " + token);
  return g;
}

// --------------------------------------------------------- LamplighterGroup

namespace {

std::uint64_t shift_lamps(std::uint64_t lamps, std::int64_t t) {
  // Shift every lamp position by +t inside the representable window.
  if (lamps == 0) return 0;
  if (t >= 64 || t <= -64) throw ElementRangeError("lamplighter lamp window exceeded");
  std::uint64_t shifted = t >= 0 ? (lamps << t) : (lamps >> -t);
  // Overflow check: shifting back must recover the mask exactly.
  std::uint64_t back = t >= 0 ? (shifted >> t) : (shifted << -t);
  if (back != lamps) throw ElementRangeError("lamplighter lamp window exceeded");
  return shifted;
}

}  // namespace

GroupElement LamplighterGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  r.coords[0] = a.coords[0] + b.coords[0];
  if (r.coords[0] < -LAMP_RANGE || r.coords[0] >= LAMP_RANGE)
    throw ElementRangeError("lamplighter cursor out of range");
  r.lamps = a.lamps ^ shift_lamps(b.lamps, a.coords[0]);
  return r;
}

GroupElement LamplighterGroup::inverse(const GroupElement& a) const {
  GroupElement r;
  r.coords[0] = -a.coords[0];
  r.lamps = shift_lamps(a.lamps, -a.coords[0]);
  return r;
}

std::vector<GroupElement> LamplighterGroup::generators() const {
  std::vector<GroupElement> gens(3);
  gens[0].coords[0] = 1;
  gens[1].coords[0] = -1;
  gens[2].lamps = 1ull << LAMP_RANGE;  // toggle the lamp at the cursor (position 0)
  return gens;
}

FiniteSubset LamplighterGroup::folner_set(int n, const FolnerSchedule& schedule) const {
  const std::int64_t L = schedule.length(n);
  if (L >= LAMP_RANGE) throw ElementRangeError("lamplighter folner set exceeds lamp window");
  const int w = static_cast<int>(2 * L + 1);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(w) << w);
  for (std::uint64_t mask = 0; mask < (1ull << w); ++mask) {
    for (std::int64_t t = -L; t <= L; ++t) {
      GroupElement g;
      g.coords[0] = t;
      g.lamps = mask << (LAMP_RANGE - L);
      elems.push_back(g);
    }
  }
  return FiniteSubset(this, std::move(elems));
}

GroupElement LamplighterGroup::make(std::int64_t cursor,
                                    const std::vector<std::int64_t>& lamp_positions) const {
  GroupElement g;
  g.coords[0] = cursor;
  for (auto p : lamp_positions) {
    if (p < -LAMP_RANGE || p >= LAMP_RANGE) throw ElementRangeError("lamp position out of range");
    g.lamps ^= 1ull << (p + LAMP_RANGE);
  }
  return g;
}

std::vector<std::int64_t> LamplighterGroup::lamp_positions(const GroupElement& g) const {
  std::vector<std::int64_t> out;
  for (std::int64_t p = -LAMP_RANGE; p < LAMP_RANGE; ++p)
    if (g.lamps & (1ull << (p + LAMP_RANGE))) out.push_back(p);
  return out;
}

std::string LamplighterGroup::format(const GroupElement& g) const {
  std::ostringstream os;
  os << g.coords[0] << '|';
  bool first = true;
  for (auto p : lamp_positions(g)) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os.str();
}

GroupElement LamplighterGroup::parse(const std::string& token) const {
  auto bar = token.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad lamplighter token: " + token);
  std::vector<std::int64_t> lamps;
  std::string rest = token.substr(bar + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    if (comma > pos) lamps.push_back(std::stoll(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return make(std::stoll(token.substr(0, bar)), lamps);
}

std::unique_ptr<GroupModel> make_group(const std::string& name) {
  if (name == "z" || name == "z1") return std::make_unique<ZdGroup>(1);
  if (name == "z2") return std::make_unique<ZdGroup>(2);
  if (name == "z3") return std::make_unique<ZdGroup>(3);
  if (name == "heisenberg") return std::make_unique<HeisenbergGroup>();
  if (name == "lamplighter") return std::make_unique<LamplighterGroup>();
  throw std::invalid_argument("unknown group: " + name);
}

}  // namespace folner
