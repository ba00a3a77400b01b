#include "extset/family.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace extset {

int check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground size n=" + std::to_string(n) +
                                " out of range [1," + std::to_string(kMaxGroundSize) + "]");
  return n;
}

int mask_card(SetMask m) { return std::popcount(m); }

std::vector<int> mask_elements(SetMask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::string format_set(SetMask m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  s += '}';
  return s;
}

bool mask_canonical_less(SetMask a, SetMask b) {
  int ca = mask_card(a), cb = mask_card(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

Family::Family(int n) : n_(check_ground_size(n)) {}

Family::Family(int n, std::vector<SetMask> members) : n_(check_ground_size(n)), members_(std::move(members)) {
  const SetMask full = full_mask(n_);
  for (SetMask m : members_) {
    if (m & ~full)
      throw std::invalid_argument("member " + format_set(m) + " has elements outside [" +
                                  std::to_string(n_) + "]");
  }
  std::sort(members_.begin(), members_.end(), mask_canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(SetMask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, mask_canonical_less);
}

bool canonical_less(const Family& a, const Family& b) {
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end(),
                                      mask_canonical_less);
}

namespace {

void check_element(const Family& f, int i) {
  if (i < 1 || i > f.ground_size())
    throw std::invalid_argument("element " + std::to_string(i) + " out of range [1," +
                                std::to_string(f.ground_size()) + "]");
}

}  // namespace

Family restrict_contains(const Family& f, int i) {
  check_element(f, i);
  std::vector<SetMask> out;
  for (SetMask m : f.members())
    if (mask_has(m, i)) out.push_back(m & ~element_mask(i));
  return Family(f.ground_size(), std::move(out));
}

Family restrict_avoids(const Family& f, int i) {
  check_element(f, i);
  std::vector<SetMask> out;
  for (SetMask m : f.members())
    if (!mask_has(m, i)) out.push_back(m);
  return Family(f.ground_size(), std::move(out));
}

Family restrict_pair(const Family& f, int i, int j) {
  check_element(f, i);
  check_element(f, j);
  if (i == j) throw std::invalid_argument("restrict_pair requires i != j");
  std::vector<SetMask> out;
  for (SetMask m : f.members())
    if (mask_has(m, i) && !mask_has(m, j)) out.push_back(m & ~element_mask(i));
  return Family(f.ground_size(), std::move(out));
}

Family relative_complement(const Family& f, SetMask universe) {
  if (universe & ~full_mask(f.ground_size()))
    throw std::invalid_argument("universe has elements outside the ground set");
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask m : f.members()) {
    if (m & ~universe)
      throw std::invalid_argument("member " + format_set(m) + " not contained in universe " +
                                  format_set(universe));
    out.push_back(universe & ~m);
  }
  return Family(f.ground_size(), std::move(out));
}

Family family_union(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("family_union: mismatched ground sizes");
  std::vector<SetMask> out = a.members();
  out.insert(out.end(), b.members().begin(), b.members().end());
  return Family(a.ground_size(), std::move(out));
}

Family family_difference(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("family_difference: mismatched ground sizes");
  std::vector<SetMask> out;
  for (SetMask m : a.members())
    if (!b.contains(m)) out.push_back(m);
  return Family(a.ground_size(), std::move(out));
}

Family family_intersection(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("family_intersection: mismatched ground sizes");
  std::vector<SetMask> out;
  for (SetMask m : a.members())
    if (b.contains(m)) out.push_back(m);
  return Family(a.ground_size(), std::move(out));
}

Family power_family(int n) {
  check_ground_size(n);
  if (n > 20) throw std::invalid_argument("power_family: 2^n too large for n=" + std::to_string(n));
  std::vector<SetMask> out;
  out.reserve(std::size_t{1} << n);
  for (SetMask m = 0; m <= full_mask(n); ++m) out.push_back(m);
  return Family(n, std::move(out));
}

Family all_subsets_le(int n, int max_card) {
  check_ground_size(n);
  if (n > 20) throw std::invalid_argument("all_subsets_le: 2^n too large for n=" + std::to_string(n));
  if (max_card < 0) throw std::invalid_argument("all_subsets_le: negative cardinality bound");
  std::vector<SetMask> out;
  for (SetMask m = 0; m <= full_mask(n); ++m)
    if (mask_card(m) <= max_card) out.push_back(m);
  return Family(n, std::move(out));
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_small_int(std::string_view s, const std::string& what) {
  s = trim_view(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed " + what + ": '" + std::string(s) + "'");
  return value;
}

SetMask parse_set_line(std::string_view line, int n, std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no);
  if (line.size() < 2 || line.front() != '{' || line.back() != '}')
    throw std::invalid_argument(where + ": malformed set literal '" + std::string(line) + "'");
  std::string_view inner = trim_view(line.substr(1, line.size() - 2));
  SetMask m = 0;
  int prev = 0;
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string_view tok = inner.substr(0, comma);
    int e = parse_small_int(tok, "element at " + where);
    if (e < 1 || e > n)
      throw std::invalid_argument(where + ": element " + std::to_string(e) +
                                  " out of range [1," + std::to_string(n) + "]");
    if (e <= prev)
      throw std::invalid_argument(where + ": elements must be strictly increasing");
    prev = e;
    m |= element_mask(e);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
    if (trim_view(inner).empty())
      throw std::invalid_argument(where + ": trailing comma in set literal");
  }
  return m;
}

ParseResult parse_family_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("family JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw std::invalid_argument("family JSON: expected object with keys \"n\" and \"sets\"");
  if (!j["n"].is_number_integer()) throw std::invalid_argument("family JSON: \"n\" must be an integer");
  const int n = check_ground_size(j["n"].get<int>());
  if (!j["sets"].is_array()) throw std::invalid_argument("family JSON: \"sets\" must be an array");

  std::vector<SetMask> members;
  std::vector<std::string> warnings;
  std::vector<SetMask> seen;
  for (const auto& arr : j["sets"]) {
    if (!arr.is_array()) throw std::invalid_argument("family JSON: every set must be an array");
    SetMask m = 0;
    int prev = 0;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw std::invalid_argument("family JSON: set elements must be integers");
      int e = v.get<int>();
      if (e < 1 || e > n)
        throw std::invalid_argument("family JSON: element " + std::to_string(e) +
                                    " out of range [1," + std::to_string(n) + "]");
      if (e <= prev) throw std::invalid_argument("family JSON: set arrays must be sorted strictly increasing");
      prev = e;
      m |= element_mask(e);
    }
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) {
      warnings.push_back("duplicate set ignored: " + format_set(m));
      continue;
    }
    seen.push_back(m);
    members.push_back(m);
  }
  return ParseResult{Family(n, std::move(members)), std::move(warnings)};
}

}  // namespace

ParseResult parse_family(std::string_view text) {
  std::string_view probe = text;
  while (!probe.empty() && std::isspace(static_cast<unsigned char>(probe.front()))) probe.remove_prefix(1);
  if (!probe.empty() && probe.front() == '{') return parse_family_json(text);

  std::vector<SetMask> members;
  std::vector<std::string> warnings;
  std::vector<SetMask> seen;
  bool have_n = false;
  int n = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = trim_view(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_n) {
      std::string squeezed;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
      if (squeezed.rfind("n=", 0) != 0)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'n=<int>' before any set");
      n = check_ground_size(parse_small_int(std::string_view(squeezed).substr(2), "ground size"));
      have_n = true;
      continue;
    }

    SetMask m = parse_set_line(line, n, line_no);
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) {
      warnings.push_back("line " + std::to_string(line_no) + ": duplicate set ignored: " + format_set(m));
      continue;
    }
    seen.push_back(m);
    members.push_back(m);
  }
  if (!have_n) throw std::invalid_argument("family file has no 'n=<int>' line");
  return ParseResult{Family(n, std::move(members)), std::move(warnings)};
}

std::string serialize_family(const Family& f) {
  std::string out = "n=" + std::to_string(f.ground_size()) + "\n";
  for (SetMask m : f.members()) {
    out += format_set(m);
    out += '\n';
  }
  return out;
}

}  // namespace extset
