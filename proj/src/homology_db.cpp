#include "hpt/homology_db.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hpt/errors.hpp"
#include "hpt/poly_text.hpp"

namespace hpt {

namespace {

constexpr std::pair<RecordKind, std::string_view> kKindNames[] = {
    {RecordKind::KnotReduced, "knot-reduced"},
    {RecordKind::LinkReduced, "link-reduced"},
    {RecordKind::LinkTotallyReduced, "link-totally-reduced"},
    {RecordKind::Khovanov, "khovanov"},
    {RecordKind::HomflyPolynomial, "homfly-polynomial"},
};

// X-string endpoints with q^N written as a.
TriDegree string_top(const Orbit& o) {
  if (o.length.grows) return o.base + TriDegree{2, 2 * o.length.offset - 2, 0};
  return o.base + TriDegree{0, 2 * (o.length.offset - 1), 0};
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_ident(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '_' && c != '.')
      return false;
  return true;
}

struct Field {
  std::string text;
  SourcePos pos;
};

StringLength parse_length(const std::string& s, SourcePos at) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto number = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SyntaxError("bad orbit length '" + s + "'", at.line, at.column);
    return std::stoi(digits);
  };
  if (!t.empty() && t[0] == 'N') {
    if (t.size() == 1) return StringLength::n_plus(0);
    if (t[1] == '+') return StringLength::n_plus(number(t.substr(2)));
    if (t[1] == '-') return StringLength::n_plus(-number(t.substr(2)));
    throw SyntaxError("bad orbit length '" + s + "'", at.line, at.column);
  }
  int len = number(t);
  if (len < 1) throw SyntaxError("orbit length must be positive", at.line, at.column);
  return StringLength::fixed(len);
}

StringModule parse_orbits(const Field& f) {
  StringModule m;
  const std::string& s = f.text;
  std::size_t i = 0;
  auto pos_of = [&](std::size_t k) {
    SourcePos p = f.pos;
    for (std::size_t j = 0; j < k; ++j) {
      if (s[j] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    if (s[i] != '(') {
      SourcePos p = pos_of(i);
      throw SyntaxError("expected '(' to start an orbit", p.line, p.column);
    }
    std::size_t comma = s.find(',', i);
    std::size_t close = s.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      SourcePos p = pos_of(i);
      throw SyntaxError("orbit must look like (monomial, length)", p.line, p.column);
    }
    TriDegree base = parse_monomial(std::string_view(s).substr(i + 1, comma - i - 1), pos_of(i + 1));
    StringLength len = parse_length(s.substr(comma + 1, close - comma - 1), pos_of(comma + 1));
    m.orbits.push_back({base, len});
    i = close + 1;
  }
  return m;
}

void validate(const HomologyRecord& r, SourcePos at) {
  auto fail = [&](const std::string& msg) {
    throw SyntaxError("record '" + r.name + "': " + msg, at.line, at.column);
  };
  if (r.kind == RecordKind::HomflyPolynomial) {
    if (r.orbits) fail("a polynomial record has no orbits");
    return;
  }
  const auto& f = r.family();
  for (const auto& [k, m] : f.terms()) {
    bool half = !k.center.integral_t();
    switch (r.kind) {
      case RecordKind::KnotReduced:
        if (half) fail("knot homology has integral t-degrees");
        if (k.atom) fail("knot homology has no [N+c] strings");
        break;
      case RecordKind::LinkReduced:
        if (half) fail("reduced link homology has integral t-degrees");
        break;
      case RecordKind::LinkTotallyReduced:
        if (k.atom) fail("totally reduced homology has no [N+c] strings");
        break;
      case RecordKind::Khovanov:
        if (half || k.atom || k.center.a != 0) fail("Khovanov homology is (q,t)-graded with integral t");
        break;
      case RecordKind::HomflyPolynomial:
        break;
    }
  }
  if (r.orbits && !same_family(r.orbits->underlying(), f))
    fail("orbits do not add up to the value");
}

}  // namespace

std::string_view kind_name(RecordKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<RecordKind> kind_from_name(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

std::string StringLength::str() const {
  if (!grows) return std::to_string(offset);
  if (offset == 0) return "N";
  return offset > 0 ? "N+" + std::to_string(offset) : "N" + std::to_string(offset);
}

FamilyPoincare StringModule::underlying() const {
  FamilyPoincare f;
  for (const auto& o : orbits) {
    if (o.length.grows) {
      TriDegree center = o.base + TriDegree{1, o.length.offset - 1, 0};
      f.add(FamilyKey{center, BracketAtom{o.length.offset}}, 1);
    } else {
      for (int j = 0; j < o.length.offset; ++j)
        f.add(FamilyKey{o.base + TriDegree{0, 2 * j, 0}, std::nullopt}, 1);
    }
  }
  return f;
}

XReduction x_string_total_reduce(const StringModule& m) {
  XReduction r;
  for (const auto& o : m.orbits) {
    r.ker.add(string_top(o), 1);
    r.coker.add(o.base, 1);
  }
  r.total = r.ker.shifted({0, 1, -1}) + r.coker.shifted({0, -1, 1});
  return r;
}

FamilyPoincare connected_sum(const FamilyPoincare& h1, const FamilyPoincare& h2) { return mul(h1, h2); }

Poincare cone_total_reduce_knot(const Poincare& h) {
  for (const auto& [d, m] : h.terms())
    if (!d.integral_t()) throw HalfIntegerT("cone reduction expects knot homology with integral t-degrees");
  return h.shifted({0, -1, 1}) + h.shifted({0, 1, -1});
}

const FamilyPoincare& HomologyRecord::family() const {
  if (auto* f = std::get_if<FamilyPoincare>(&value)) return *f;
  throw DataError("record '" + name + "' is a polynomial, not a homology");
}

Poincare HomologyRecord::poincare() const {
  auto p = family().as_poincare();
  if (!p) throw DataError("record '" + name + "' depends on N");
  return *p;
}

const LaurentPoly& HomologyRecord::laurent() const {
  if (auto* p = std::get_if<LaurentPoly>(&value)) return *p;
  throw DataError("record '" + name + "' is a homology, not a polynomial");
}

std::string HomologyRecord::value_text() const {
  if (auto* p = std::get_if<LaurentPoly>(&value)) return format(*p);
  return format(std::get<FamilyPoincare>(value));
}

std::vector<HomologyRecord> parse_records(std::string_view text, std::string_view source) {
  std::vector<HomologyRecord> out;
  std::map<std::string, Field> fields;
  std::string last_key;
  SourcePos start{};
  int line_no = 0;

  auto flush = [&]() {
    if (fields.empty()) return;
    auto need = [&](const char* key) -> Field& {
      auto it = fields.find(key);
      if (it == fields.end())
        throw SyntaxError(std::string(source) + ": record is missing '" + key + ":'", start.line, 1);
      return it->second;
    };
    HomologyRecord r;
    Field& name = need("name");
    r.name = trim(name.text);
    if (!valid_ident(r.name)) throw SyntaxError("bad record name '" + r.name + "'", name.pos.line, name.pos.column);
    Field& kind = need("kind");
    auto k = kind_from_name(trim(kind.text));
    if (!k) throw SyntaxError("unknown kind '" + trim(kind.text) + "'", kind.pos.line, kind.pos.column);
    r.kind = *k;
    r.provenance = trim(need("provenance").text);
    Field& value = need("value");
    if (r.kind == RecordKind::HomflyPolynomial) {
      r.value = parse_laurent(value.text, value.pos);
    } else {
      r.value = parse_family(value.text, value.pos);
    }
    if (auto it = fields.find("orbits"); it != fields.end()) r.orbits = parse_orbits(it->second);
    for (const auto& [key, f] : fields)
      if (key != "name" && key != "kind" && key != "provenance" && key != "value" && key != "orbits")
        throw SyntaxError("unknown field '" + key + "'", f.pos.line, f.pos.column);
    validate(r, start);
    out.push_back(std::move(r));
    fields.clear();
    last_key.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      // Continuation of the previous field.
      if (last_key.empty()) throw SyntaxError("continuation line outside a field", line_no, 1);
      fields[last_key].text += "\n" + line;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'key: value'", line_no, 1);
    std::string key = line.substr(0, colon);
    if (fields.empty()) start = {line_no, 1};
    if (fields.count(key)) throw SyntaxError("field '" + key + "' given twice", line_no, 1);
    fields[key] = Field{line.substr(colon + 1), SourcePos{line_no, static_cast<int>(colon) + 2}};
    last_key = key;
  }
  flush();
  return out;
}

std::string format_record(const HomologyRecord& r) {
  std::ostringstream os;
  os << "name: " << r.name << "\n"
     << "kind: " << kind_name(r.kind) << "\n"
     << "provenance: " << r.provenance << "\n"
     << "value: " << r.value_text() << "\n";
  if (r.orbits) {
    os << "orbits:";
    for (const auto& o : r.orbits->orbits) os << " (" << format_degree(o.base) << ", " << o.length.str() << ")";
    os << "\n";
  }
  return os.str();
}

Database Database::with_defaults() {
  Database db;
  db.load_text(embedded_records_text(), "<embedded>", false);
  return db;
}

Database Database::empty() { return Database(); }

void Database::add(HomologyRecord r, bool allow_shadow, std::vector<std::string>* warnings) {
  auto it = records_.find(r.name);
  if (it != records_.end()) {
    if (!allow_shadow) throw DuplicateName("record '" + r.name + "' is already defined");
    if (warnings) warnings->push_back("record '" + r.name + "' shadows an earlier definition");
    it->second = std::move(r);
    return;
  }
  std::string key = r.name;
  records_.emplace(std::move(key), std::move(r));
}

void Database::load_text(std::string_view text, std::string_view source, bool allow_shadow,
                         std::vector<std::string>* warnings) {
  auto recs = parse_records(text, source);
  std::map<std::string, int> seen;
  for (const auto& r : recs)
    if (seen[r.name]++) throw DuplicateName(std::string(source) + ": record '" + r.name + "' appears twice");
  for (auto& r : recs) add(std::move(r), allow_shadow, warnings);
}

void Database::load_file(const std::filesystem::path& path, bool allow_shadow, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path.string(), allow_shadow, warnings);
}

bool Database::contains(std::string_view name) const { return records_.find(name) != records_.end(); }

const HomologyRecord& Database::get(std::string_view name) const {
  auto it = records_.find(name);
  if (it == records_.end()) throw UnknownRecord("no record named '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> Database::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : records_) out.push_back(k);
  return out;
}

}  // namespace hpt
