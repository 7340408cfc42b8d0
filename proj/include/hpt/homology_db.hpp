#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hpt/graded_poly.hpp"

namespace hpt {

enum class RecordKind { KnotReduced, LinkReduced, LinkTotallyReduced, Khovanov, HomflyPolynomial };

std::string_view kind_name(RecordKind k);
std::optional<RecordKind> kind_from_name(std::string_view s);

// Length of an X-orbit: either a fixed positive integer or N + offset.
struct StringLength {
  bool grows = false;
  int offset = 1;

  static StringLength fixed(int len) { return {false, len}; }
  static StringLength n_plus(int c) { return {true, c}; }
  int at(int n) const { return grows ? n + offset : offset; }
  std::string str() const;
  friend bool operator==(const StringLength&, const StringLength&) = default;
};

// An X-orbit starting at `base`. For N-dependent lengths the base is written
// with q^N merged into a, so a string [N+c] centred at a^i q^j starts at
// a^{i-1} q^{j-c+1}.
struct Orbit {
  TriDegree base;
  StringLength length;
  friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct StringModule {
  std::vector<Orbit> orbits;

  FamilyPoincare underlying() const;
  std::size_t size() const { return orbits.size(); }
};

struct XReduction {
  Poincare ker;
  Poincare coker;
  Poincare total;
};

// Kernel and cokernel of multiplication by X on a string module, and the
// totally reduced homology obtained from them with the (-1, 1/2) maps.
XReduction x_string_total_reduce(const StringModule& m);

FamilyPoincare connected_sum(const FamilyPoincare& h1, const FamilyPoincare& h2);

// h (q^{-1} t^{1/2} + q t^{-1/2}): total reduction of a knot, where X acts by 0.
Poincare cone_total_reduce_knot(const Poincare& h);

struct HomologyRecord {
  std::string name;
  RecordKind kind = RecordKind::KnotReduced;
  std::string provenance;
  std::variant<FamilyPoincare, LaurentPoly> value;
  std::optional<StringModule> orbits;

  const FamilyPoincare& family() const;
  // Throws DataError if the record carries [N+c] strings.
  Poincare poincare() const;
  const LaurentPoly& laurent() const;
  std::string value_text() const;
};

std::vector<HomologyRecord> parse_records(std::string_view text, std::string_view source = "<text>");
std::string format_record(const HomologyRecord& r);

class Database {
 public:
  // Database preloaded with the embedded records.
  static Database with_defaults();
  static Database empty();

  // Adds records; a name already present is an error unless allow_shadow,
  // in which case the new record wins and a warning is appended.
  void add(HomologyRecord r, bool allow_shadow, std::vector<std::string>* warnings = nullptr);
  void load_text(std::string_view text, std::string_view source, bool allow_shadow,
                 std::vector<std::string>* warnings = nullptr);
  void load_file(const std::filesystem::path& path, bool allow_shadow,
                 std::vector<std::string>* warnings = nullptr);

  bool contains(std::string_view name) const;
  const HomologyRecord& get(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, HomologyRecord, std::less<>> records_;
};

std::string_view embedded_records_text();

}  // namespace hpt
