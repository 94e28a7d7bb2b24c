#include "repstab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "repstab/error.hpp"
#include "repstab/presets.hpp"

namespace repstab {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

[[noreturn]] void fail(const std::string& message, const Token& at) {
  throw ParseError(message, at.line, at.col);
}

[[noreturn]] void fail_line(const std::string& message, int line) {
  throw ParseError(message, line, 1);
}

// Nonempty content lines as whitespace-separated tokens; '#' starts a
// comment anywhere.
std::vector<Line> scan(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      line.tokens.push_back(
          {raw.substr(start, i - start), number, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Rational parse_rational_token(const Token& token) {
  try {
    return parse_rational(token.text);
  } catch (const Error&) {
    fail("expected a rational, got '" + token.text + "'", token);
  }
}

long long parse_integer_token(const Token& token) {
  Rational value = parse_rational_token(token);
  if (!is_integer(value)) fail("expected an integer, got '" + token.text + "'", token);
  return to_longlong(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::bad_input, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::size_t> parse_word(const Token& token, const std::string& path_text,
                                    const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> word;
  std::size_t start = 0;
  while (start <= path_text.size()) {
    std::size_t dot = path_text.find('.', start);
    std::string name = path_text.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (name.empty()) fail("empty arrow name in path", token);
    bool found = false;
    for (std::size_t a = 0; a < arrows.size() && !found; ++a) {
      if (arrows[a].name == name) {
        word.push_back(a);
        found = true;
      }
    }
    if (!found) fail("unknown arrow '" + name + "'", token);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return word;
}

Relation parse_relation(const Line& line, const std::vector<Arrow>& arrows) {
  Relation rel;
  bool expect_term = true;
  int sign = 1;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const Token& token = line.tokens[i];
    if (token.text == "+" || token.text == "-") {
      if (expect_term && !(i == 1 && token.text == "-"))
        fail("unexpected sign", token);
      if (token.text == "-") sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) fail("missing '+' or '-' between terms", token);
    RelationTerm term;
    std::string path_text = token.text;
    std::size_t star = token.text.find('*');
    if (star != std::string::npos) {
      Token coeff{token.text.substr(0, star), token.line, token.col};
      term.coeff = parse_rational_token(coeff);
      path_text = token.text.substr(star + 1);
    } else {
      term.coeff = Rational(1);
    }
    if (sign < 0) term.coeff = -term.coeff;
    term.word = parse_word(token, path_text, arrows);
    rel.terms.push_back(std::move(term));
    expect_term = false;
    sign = 1;
  }
  if (expect_term || rel.terms.empty())
    fail_line("relation needs at least one term", line.number);
  return rel;
}

void expect_args(const Line& line, std::size_t n, const std::string& what) {
  if (line.tokens.size() != n + 1)
    fail_line("'" + line.tokens[0].text + "' takes " + what, line.number);
}

std::string rational_text(const Rational& value) { return to_string(value); }

}  // namespace

AlgebraPtr parse_algebra(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  auto vertex_of = [&](const Token& token) -> std::size_t {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == token.text) return i;
    fail("unknown vertex '" + token.text + "'", token);
  };

  for (const Line& line : scan(text)) {
    const std::string& head = line.tokens[0].text;
    if (head == "vertex") {
      expect_args(line, 1, "one name");
      vertices.push_back(line.tokens[1].text);
    } else if (head == "arrow") {
      expect_args(line, 3, "a name, a source and a target");
      arrows.push_back({line.tokens[1].text, vertex_of(line.tokens[2]),
                        vertex_of(line.tokens[3])});
    } else if (head == "relation") {
      relations.push_back(parse_relation(line, arrows));
    } else {
      fail("unknown directive '" + head + "'", line.tokens[0]);
    }
  }
  return Algebra::make(std::move(vertices), std::move(arrows),
                       std::move(relations));
}

AlgebraPtr load_algebra(const std::string& path) {
  return parse_algebra(read_file(path));
}

std::string format_algebra(const Algebra& algebra) {
  std::string out;
  for (const std::string& v : algebra.vertices()) out += "vertex " + v + "\n";
  for (const Arrow& a : algebra.arrows())
    out += "arrow " + a.name + " " + algebra.vertices()[a.source] + " " +
           algebra.vertices()[a.target] + "\n";
  for (const Relation& rel : algebra.relations()) {
    out += "relation";
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      const RelationTerm& term = rel.terms[t];
      Rational mag = abs(term.coeff);
      if (t == 0)
        out += sgn(term.coeff) < 0 ? " - " : " ";
      else
        out += sgn(term.coeff) < 0 ? " - " : " + ";
      if (mag != 1) out += rational_text(mag) + "*";
      std::string sep;
      for (std::size_t a : term.word) {
        out += sep + algebra.arrows()[a].name;
        sep = ".";
      }
    }
    out += "\n";
  }
  return out;
}

Representation parse_representation(const std::string& text,
                                    const std::string& base_dir) {
  AlgebraPtr algebra;
  std::optional<FieldSpec> field;
  std::optional<std::vector<std::size_t>> dims;
  std::vector<std::optional<Matrix>> maps;

  std::vector<Line> lines = scan(text);
  int last_line = lines.empty() ? 0 : lines.back().number;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& head = line.tokens[0].text;
    if (head == "algebra") {
      expect_args(line, 1, "one reference");
      if (algebra) fail_line("duplicate 'algebra' line", line.number);
      const std::string& ref = line.tokens[1].text;
      if (ref.rfind("preset:", 0) == 0) {
        algebra = preset_algebra(ref.substr(7));
      } else {
        std::filesystem::path p(ref);
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        algebra = load_algebra(p.string());
      }
      maps.resize(algebra->arrow_count());
    } else if (head == "field") {
      expect_args(line, 1, "one field name");
      if (field) fail_line("duplicate 'field' line", line.number);
      try {
        field = FieldSpec::parse(line.tokens[1].text);
      } catch (const Error&) {
        fail("expected Q or F<p>, got '" + line.tokens[1].text + "'",
             line.tokens[1]);
      }
    } else if (head == "dims") {
      if (!algebra) fail_line("'dims' before 'algebra'", line.number);
      if (dims) fail_line("duplicate 'dims' line", line.number);
      expect_args(line, algebra->vertex_count(), "one entry per vertex");
      dims.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        long long d = parse_integer_token(line.tokens[i]);
        if (d < 0) fail("dimensions cannot be negative", line.tokens[i]);
        dims->push_back(static_cast<std::size_t>(d));
      }
    } else if (head == "map") {
      if (!algebra || !field || !dims)
        fail_line("'map' before algebra/field/dims", line.number);
      expect_args(line, 1, "one arrow name");
      std::optional<std::size_t> arrow = algebra->arrow_index(line.tokens[1].text);
      if (!arrow) fail("unknown arrow '" + line.tokens[1].text + "'", line.tokens[1]);
      if (maps[*arrow]) fail("duplicate map for this arrow", line.tokens[1]);

      const std::size_t rows = (*dims)[algebra->arrows()[*arrow].target];
      const std::size_t cols = (*dims)[algebra->arrows()[*arrow].source];
      Matrix m(*field, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (++li >= lines.size())
          fail_line("missing matrix row", last_line + 1);
        const Line& row = lines[li];
        if (row.tokens.size() != cols)
          fail_line("matrix row needs " + std::to_string(cols) + " entries",
                    row.number);
        for (std::size_t c = 0; c < cols; ++c)
          m.set(r, c, parse_rational_token(row.tokens[c]));
      }
      maps[*arrow] = std::move(m);
    } else {
      fail("unknown directive '" + head + "'", line.tokens[0]);
    }
  }

  if (!algebra) fail_line("missing 'algebra' line", last_line + 1);
  if (!field) fail_line("missing 'field' line", last_line + 1);
  if (!dims) fail_line("missing 'dims' line", last_line + 1);
  std::vector<Matrix> final_maps;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    if (!maps[a])
      fail_line("missing map for arrow '" + algebra->arrows()[a].name + "'",
                last_line + 1);
    final_maps.push_back(std::move(*maps[a]));
  }
  return Representation::make(std::move(algebra), *field, std::move(*dims),
                              std::move(final_maps));
}

Representation load_representation(const std::string& path) {
  std::filesystem::path p(path);
  return parse_representation(read_file(path), p.parent_path().string().empty()
                                                   ? "."
                                                   : p.parent_path().string());
}

std::string format_representation(const Representation& rep,
                                  const std::string& algebra_ref) {
  std::string out = "algebra " + algebra_ref + "\n";
  out += "field " + rep.field().name() + "\n";
  out += "dims";
  for (std::size_t d : rep.dims()) out += " " + std::to_string(d);
  out += "\n";
  for (std::size_t a = 0; a < rep.algebra()->arrow_count(); ++a) {
    out += "map " + rep.algebra()->arrows()[a].name + "\n";
    const Matrix& m = rep.arrow_map(a);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::string sep;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out += sep + rational_text(m.at(r, c));
        sep = " ";
      }
      out += "\n";
    }
  }
  return out;
}

StabilityFileData parse_stability(const std::string& text) {
  StabilityFileData data;
  bool have_beta = false;
  bool have_gamma = false;

  for (const Line& line : scan(text)) {
    const std::string& head = line.tokens[0].text;
    if (head == "beta") {
      if (have_beta) fail_line("duplicate 'beta' line", line.number);
      have_beta = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        data.beta.push_back(parse_rational_token(line.tokens[i]));
      if (data.beta.empty()) fail_line("'beta' needs entries", line.number);
    } else if (head == "gamma") {
      if (have_gamma) fail_line("duplicate 'gamma' line", line.number);
      have_gamma = true;
      if (line.tokens.size() == 2 && line.tokens[1].text == "canonical")
        continue;  // gamma stays nullopt: expand against alpha downstream
      data.gamma.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        data.gamma->push_back(parse_rational_token(line.tokens[i]));
      if (data.gamma->empty()) fail_line("'gamma' needs entries", line.number);
    } else if (head == "alpha") {
      if (data.alpha) fail_line("duplicate 'alpha' line", line.number);
      data.alpha.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        data.alpha->push_back(parse_integer_token(line.tokens[i]));
      if (data.alpha->empty()) fail_line("'alpha' needs entries", line.number);
    } else {
      fail("unknown directive '" + head + "'", line.tokens[0]);
    }
  }
  if (!have_beta) fail_line("missing 'beta' line", 1);
  if (!have_gamma) fail_line("missing 'gamma' line", 1);
  return data;
}

StabilityFileData load_stability(const std::string& path) {
  return parse_stability(read_file(path));
}

std::string format_stability(const StabilityFileData& data) {
  std::string out = "beta";
  for (const Rational& b : data.beta) out += " " + rational_text(b);
  out += "\ngamma";
  if (!data.gamma) {
    out += " canonical";
  } else {
    for (const Rational& g : *data.gamma) out += " " + rational_text(g);
  }
  out += "\n";
  if (data.alpha) {
    out += "alpha";
    for (long long a : *data.alpha) out += " " + std::to_string(a);
    out += "\n";
  }
  return out;
}

}  // namespace repstab
