#include "tropcore/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tropcore/errors.hpp"

namespace tropcore {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::size_t parse_dimension(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("dimension must be a positive integer");
  const unsigned long long n = std::stoull(text);
  if (n == 0) throw Error("dimension must be a positive integer");
  return static_cast<std::size_t>(n);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Matrix MatrixDocument::matrix() const {
  Matrix a(n, semiring);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_scalar(entries[i][j], semiring);
  return a;
}

MatrixDocument MatrixDocument::from_matrix(const Matrix& a, std::optional<std::string> label) {
  MatrixDocument doc;
  doc.semiring = a.semiring();
  doc.n = a.size();
  doc.label = std::move(label);
  doc.entries.assign(a.size(), std::vector<std::string>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) doc.entries[i][j] = format_scalar(a(i, j), a.semiring());
  return doc;
}

MatrixDocument parse_matrix_text(std::string_view text) {
  MatrixDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      try {
        doc.semiring = Semiring(parse_semiring_name(tokens[0].text));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, tokens[0].column);
      }
      if (tokens.size() < 2) throw ParseError("header needs a dimension", line_no, line.size() + 1);
      try {
        doc.n = parse_dimension(tokens[1].text);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, tokens[1].column);
      }
      if (tokens.size() > 2) {
        const std::size_t from = tokens[2].column - 1;
        std::size_t to = line.find('#', from);
        std::string label(line.substr(from, to == std::string_view::npos ? std::string_view::npos : to - from));
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
        doc.label = label;
      }
      have_header = true;
    } else {
      if (doc.entries.size() == doc.n) throw ParseError("more rows than the declared dimension", line_no, 1);
      if (tokens.size() != doc.n)
        throw ParseError("expected " + std::to_string(doc.n) + " entries, found " + std::to_string(tokens.size()),
                         line_no, tokens.size() > doc.n ? tokens[doc.n].column : line.size() + 1);
      std::vector<std::string> row;
      for (const auto& t : tokens) {
        try {
          parse_scalar(t.text, doc.semiring);
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, t.column);
        }
        row.push_back(t.text);
      }
      doc.entries.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header line", line_no == 0 ? 1 : line_no, 1);
  if (doc.entries.size() != doc.n)
    throw ParseError("expected " + std::to_string(doc.n) + " rows, found " + std::to_string(doc.entries.size()),
                     line_no, 1);
  return doc;
}

MatrixDocument parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  auto fail = [](const std::string& what) { return ParseError(what, 1, 1); };
  if (!j.is_object()) throw fail("matrix document must be a JSON object");
  MatrixDocument doc;
  try {
    doc.semiring = Semiring(parse_semiring_name(j.value("semiring", std::string("maxplus"))));
  } catch (const Error& e) {
    throw fail(e.what());
  }
  if (!j.contains("entries") || !j["entries"].is_array()) throw fail("missing 'entries' array");
  const auto& rows = j["entries"];
  doc.n = rows.size();
  if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != doc.n))
    throw fail("'n' does not match the number of rows");
  if (doc.n == 0) throw fail("matrix must have at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != doc.n)
      throw fail("row " + std::to_string(i + 1) + " must have " + std::to_string(doc.n) + " entries");
    std::vector<std::string> row;
    for (const auto& x : rows[i]) {
      std::string s;
      if (x.is_string())
        s = x.get<std::string>();
      else if (x.is_number_integer())
        s = std::to_string(x.get<long long>());
      else
        throw fail("entries must be strings or integers");
      try {
        parse_scalar(s, doc.semiring);
      } catch (const Error& e) {
        throw fail("row " + std::to_string(i + 1) + ": " + e.what());
      }
      row.push_back(std::move(s));
    }
    doc.entries.push_back(std::move(row));
  }
  if (j.contains("label") && j["label"].is_string()) doc.label = j["label"].get<std::string>();
  return doc;
}

MatrixDocument parse_matrix_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

MatrixDocument read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string serialize_text(const MatrixDocument& doc) {
  std::string out(doc.semiring.name());
  out += ' ' + std::to_string(doc.n);
  if (doc.label) out += ' ' + *doc.label;
  out += '\n';
  for (const auto& row : doc.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + row[j];
    out += '\n';
  }
  return out;
}

std::string serialize_json(const MatrixDocument& doc) {
  nlohmann::ordered_json j;
  j["semiring"] = std::string(doc.semiring.name());
  j["n"] = doc.n;
  j["entries"] = doc.entries;
  if (doc.label) j["label"] = *doc.label;
  return j.dump() + "\n";
}

Vector parse_vector(std::string_view text, Semiring s) {
  std::vector<Scalar> out;
  std::string token;
  bool comma = false, filled = false;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(parse_scalar(token, s));
      filled = true;
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
      if (!filled) throw Error("empty vector entry");
      comma = true;
      filled = false;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (comma && !filled) throw Error("empty vector entry");
  return Vector(s, std::move(out));
}

nlohmann::json scalar_json(const Scalar& a, Semiring s) { return format_scalar(a, s); }

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(format_scalar(x, v.semiring()));
  return j;
}

nlohmann::json nodes_json(const std::vector<std::size_t>& nodes) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t v : nodes) j.push_back(v + 1);
  return j;
}

}  // namespace tropcore
