#include "dqpair/scheme_io.hpp"

#include <fstream>
#include <sstream>

namespace dqpair {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Reads a line, stripping one trailing '\r' so CRLF input parses.
bool get_line(std::istream& is, std::string& line) {
  if (!std::getline(is, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

void write_scm(std::ostream& os, const AssociationScheme& s, const SchemeMeta& meta) {
  const Index n = s.order();
  os << "scheme " << n << " " << s.rank() << "\n";
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (v) os << " ";
      os << s.colors()(u, v);
    }
    os << "\n";
  }
  os << "# variant=" << to_string(meta.variant) << "\n";
  for (const char* key : {"n", "a", "b"}) {
    auto it = meta.params.find(key);
    if (it != meta.params.end()) os << "# " << key << "=" << it->second << "\n";
  }
  if (!meta.labels.empty()) os << "# labels=" << join(meta.labels, ',') << "\n";
}

std::string to_scm_string(const AssociationScheme& s, const SchemeMeta& meta) {
  std::ostringstream os;
  write_scm(os, s, meta);
  return os.str();
}

LoadedScheme read_scm(std::istream& is) {
  std::string line;
  if (!get_line(is, line)) throw FormatError("empty scheme file");
  std::istringstream header(line);
  std::string tag;
  long order = 0, rank = 0;
  header >> tag >> order >> rank;
  if (tag != "scheme" || header.fail() || order <= 0 || rank <= 0)
    throw FormatError("bad scheme header: '" + line + "'");

  ColorMatrix colors(order, order);
  for (long u = 0; u < order; ++u) {
    if (!get_line(is, line)) throw FormatError("scheme file truncated at row " + std::to_string(u));
    std::istringstream row(line);
    for (long v = 0; v < order; ++v) {
      long c = -1;
      row >> c;
      if (row.fail() || c < 0 || c >= rank)
        throw FormatError("bad relation index in row " + std::to_string(u) + " column " +
                          std::to_string(v));
      colors(u, v) = static_cast<int>(c);
    }
    long extra;
    if (row >> extra) throw FormatError("excess entries in row " + std::to_string(u));
  }

  SchemeMeta meta;
  while (get_line(is, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') throw FormatError("unexpected trailing line: '" + line + "'");
    std::string body = line.substr(1);
    while (!body.empty() && body.front() == ' ') body.erase(body.begin());
    auto eq = body.find('=');
    if (eq == std::string::npos) continue;  // free-form comment
    std::string key = body.substr(0, eq);
    std::string value = body.substr(eq + 1);
    if (key == "variant") {
      auto v = variant_from_string(value);
      if (!v) throw FormatError("unknown variant '" + value + "'");
      meta.variant = *v;
    } else if (key == "n" || key == "a" || key == "b") {
      try {
        meta.params[key] = std::stol(value);
      } catch (const std::exception&) {
        throw FormatError("bad integer for metadata key '" + key + "'");
      }
    } else if (key == "labels") {
      meta.labels = split(value, ',');
    }
  }

  AssociationScheme s = AssociationScheme::from_colors(std::move(colors));
  if (s.rank() != rank)
    throw FormatError("header declares rank " + std::to_string(rank) + " but " +
                      std::to_string(s.rank()) + " relations occur");
  if (!meta.labels.empty() && static_cast<long>(meta.labels.size()) != rank)
    throw FormatError("metadata lists " + std::to_string(meta.labels.size()) +
                      " labels for rank " + std::to_string(rank));
  return LoadedScheme{std::move(s), std::move(meta)};
}

LoadedScheme read_scm_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open scheme file '" + path + "'");
  return read_scm(f);
}

void write_scm_file(const std::string& path, const AssociationScheme& s, const SchemeMeta& meta) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write scheme file '" + path + "'");
  write_scm(f, s, meta);
}

}  // namespace dqpair
