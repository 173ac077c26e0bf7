#include "meta_ea/chromosome_io.hpp"

#include "meta_ea/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace meta_ea {

namespace {

template <typename Args>
void format_line(std::ostringstream& os, std::size_t label, GeneKind kind, const Args& args)
{
  os << label << ": " << to_string(kind);
  for (std::size_t a = 0; a < arity(kind); ++a)
    os << ' ' << args[a] + 1;
  os << '\n';
}

std::vector<std::string_view> tokenize(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ' ' || ch == '\t' || ch == ',' || ch == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i]))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j]))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_index(std::string_view s)
{
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return v;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg)
{
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

std::string format_chromosome(const MepChromosome& c)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i)
    format_line(os, i + 1, c.genes[i].kind, c.genes[i].args);
  return os.str();
}

std::string format_program(const EaProgram& p)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i)
    format_line(os, i + 1, p.instructions[i].kind, p.instructions[i].args);
  return os.str();
}

MepChromosome parse_chromosome(std::string_view text)
{
  MepChromosome c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].starts_with('#'))
      continue;

    // The label may be glued to its colon ("4:") or separate ("4 :").
    std::string_view label = tokens[0];
    std::size_t next = 1;
    if (label.ends_with(':')) {
      label.remove_suffix(1);
    } else if (tokens.size() > 1 && tokens[1] == ":") {
      next = 2;
    } else if (auto colon = label.find(':'); colon != std::string_view::npos) {
      // "4:Select"
      tokens.insert(tokens.begin() + 1, label.substr(colon + 1));
      label = label.substr(0, colon);
    } else {
      fail(line_no, "expected '<label>: <kind> [args]'");
    }

    const auto label_value = to_index(label);
    if (!label_value)
      fail(line_no, "bad label '" + std::string(label) + "'");
    if (*label_value != c.size() + 1)
      fail(line_no, "expected label " + std::to_string(c.size() + 1) + ", found " + std::to_string(*label_value));
    if (next >= tokens.size())
      fail(line_no, "missing gene kind");

    const auto kind = parse_gene_kind(tokens[next]);
    if (!kind)
      fail(line_no, "unknown gene kind '" + std::string(tokens[next]) + "'");
    const std::size_t n_args = tokens.size() - next - 1;
    if (n_args != arity(*kind))
      fail(line_no, std::string(to_string(*kind)) + " takes " + std::to_string(arity(*kind)) + " argument(s), got " +
                        std::to_string(n_args));

    Gene g;
    g.kind = *kind;
    for (std::size_t a = 0; a < n_args; ++a) {
      const auto ref = to_index(tokens[next + 1 + a]);
      if (!ref || *ref == 0)
        fail(line_no, "bad argument '" + std::string(tokens[next + 1 + a]) + "'");
      if (*ref >= *label_value)
        fail(line_no, "argument " + std::to_string(*ref) + " does not refer to an earlier gene");
      g.args[a] = static_cast<std::uint32_t>(*ref - 1);
    }
    c.genes.push_back(g);
  }
  if (c.genes.empty())
    throw ParseError("chromosome text contains no genes");
  return c;
}

MepChromosome load_chromosome(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open chromosome file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_chromosome(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

} // namespace meta_ea
