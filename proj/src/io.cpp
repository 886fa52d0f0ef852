#include "hirsch/io.hpp"

#include <sstream>
#include <vector>

#include "hirsch/errors.hpp"

namespace hirsch {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::size_t parse_count(const std::string& word, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty() || word[0] == '-')
    throw ParseError("line " + std::to_string(line_no) + ": expected a count, got '" + word + "'");
  return value;
}

}  // namespace

PolyFile read_polyfile(std::istream& in) {
  enum class Kind { h, v } kind = Kind::h;
  std::vector<std::string> labels;
  std::optional<nlohmann::json> recipe;
  std::vector<std::size_t> linearity;
  bool seen_begin = false, seen_end = false;
  std::size_t rows_expected = 0, cols = 0;
  bool have_size = false;
  std::vector<std::vector<Rational>> rows;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '*') {
      const std::string body = line.substr(first + 1);
      const auto words = split(body);
      if (!words.empty() && words[0] == "labels:") {
        labels.assign(words.begin() + 1, words.end());
      } else if (!words.empty() && words[0] == "recipe") {
        const auto brace = body.find('{');
        try {
          recipe = nlohmann::json::parse(body.substr(brace));
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(line_no) + ": malformed recipe comment");
        }
      }
      continue;
    }
    const auto words = split(line);
    if (seen_end) continue;
    if (!seen_begin) {
      if (words[0] == "H-representation") kind = Kind::h;
      else if (words[0] == "V-representation") kind = Kind::v;
      else if (words[0] == "linearity") {
        if (words.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": empty linearity");
        const std::size_t k = parse_count(words[1], line_no);
        if (words.size() != k + 2)
          throw ParseError("line " + std::to_string(line_no) + ": linearity count mismatch");
        for (std::size_t i = 0; i < k; ++i) linearity.push_back(parse_count(words[i + 2], line_no));
      } else if (words[0] == "begin") {
        seen_begin = true;
      }
      continue;
    }
    if (!have_size) {
      if (words.size() != 3 || (words[2] != "rational" && words[2] != "integer"))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'm n rational'");
      rows_expected = parse_count(words[0], line_no);
      cols = parse_count(words[1], line_no);
      if (cols < 1) throw ParseError("line " + std::to_string(line_no) + ": need at least one column");
      have_size = true;
      continue;
    }
    if (words[0] == "end") {
      seen_end = true;
      continue;
    }
    if (words.size() != cols)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) + " entries");
    std::vector<Rational> row;
    for (const auto& w : words) {
      try {
        row.push_back(parse_rational(w));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  if (!seen_begin || !have_size) throw ParseError("missing 'begin' block");
  if (!seen_end) throw ParseError("missing 'end'");
  if (rows.size() != rows_expected)
    throw ParseError("expected " + std::to_string(rows_expected) + " rows, found " + std::to_string(rows.size()));

  PolyFile f;
  f.recipe = std::move(recipe);
  const std::size_t d = cols - 1;
  if (kind == Kind::h) {
    HPolyhedron h;
    h.d = d;
    for (auto& r : rows) h.rows.push_back(HalfSpace{r[0], QVector(r.begin() + 1, r.end())});
    for (auto i : linearity) {
      if (i < 1 || i > h.rows.size()) throw ParseError("linearity index out of range");
      h.linearity.insert(i - 1);
    }
    if (!labels.empty() && labels.size() != h.rows.size())
      throw ParseError("label count does not match row count");
    h.labels = std::move(labels);
    f.poly = std::move(h);
  } else {
    if (!linearity.empty()) throw ParseError("linearity is not supported in V-files");
    VPolyhedron v;
    v.d = d;
    for (auto& r : rows) {
      QVector x(r.begin() + 1, r.end());
      if (r[0] == 1) v.vertices.push_back(std::move(x));
      else if (r[0] == 0) v.rays.push_back(std::move(x));
      else throw ParseError("V-file rows must start with 0 or 1");
    }
    if (!labels.empty() && labels.size() != v.vertices.size())
      throw ParseError("label count does not match vertex count");
    v.labels = std::move(labels);
    f.poly = std::move(v);
  }
  return f;
}

PolyFile read_polyfile(const std::string& text) {
  std::istringstream in(text);
  return read_polyfile(in);
}

namespace {

void write_header(std::ostream& out, const std::optional<nlohmann::json>& recipe,
                  const std::vector<std::string>& labels) {
  if (recipe) out << "# recipe " << recipe->dump() << '\n';
  if (!labels.empty()) {
    out << "# labels:";
    for (const auto& l : labels) out << ' ' << l;
    out << '\n';
  }
}

void write_row(std::ostream& out, const Rational& first, const QVector& rest) {
  out << to_string(first);
  for (const auto& x : rest) out << ' ' << to_string(x);
  out << '\n';
}

}  // namespace

void write_hfile(std::ostream& out, const HPolyhedron& h, const std::optional<nlohmann::json>& recipe) {
  write_header(out, recipe, h.labels);
  out << "H-representation\n";
  if (!h.linearity.empty()) {
    out << "linearity " << h.linearity.size();
    for (auto i : h.linearity) out << ' ' << i + 1;
    out << '\n';
  }
  out << "begin\n" << h.rows.size() << ' ' << h.d + 1 << " rational\n";
  for (const auto& r : h.rows) write_row(out, r.b, r.a);
  out << "end\n";
}

void write_vfile(std::ostream& out, const VPolyhedron& v, const std::optional<nlohmann::json>& recipe) {
  write_header(out, recipe, v.labels);
  out << "V-representation\nbegin\n" << v.vertices.size() + v.rays.size() << ' ' << v.d + 1 << " rational\n";
  for (const auto& x : v.vertices) write_row(out, 1, x);
  for (const auto& r : v.rays) write_row(out, 0, r);
  out << "end\n";
}

void write_polyfile(std::ostream& out, const PolyFile& f) {
  if (f.is_h()) write_hfile(out, f.h(), f.recipe);
  else write_vfile(out, f.v(), f.recipe);
}

std::string to_text(const PolyFile& f) {
  std::ostringstream out;
  write_polyfile(out, f);
  return out.str();
}

}  // namespace hirsch
