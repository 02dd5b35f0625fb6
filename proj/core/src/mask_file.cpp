#include "pisot/mask_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "pisot/errors.hpp"

namespace pisot {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("bad number '" + std::string(s) + "'");
  }
  return v;
}

long long parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

LaurentTranslate parse_translate(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "0") return {};
  LaurentTranslate t;
  for (auto item : split(s, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ValidationError("translate term '" + std::string(item) + "' needs exponent:coefficient");
    }
    const auto exponent = parse_int(item.substr(0, colon));
    const auto coef = parse_int(item.substr(colon + 1));
    t += LaurentTranslate::monomial(static_cast<int>(exponent), coef);
  }
  return t;
}

Eigen::MatrixXcd parse_matrix(std::string_view s, int rank) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = trim(s.substr(1, s.size() - 2));
  const auto rows = split(s, '|');
  if (static_cast<int>(rows.size()) != rank) {
    throw ValidationError("matrix '" + std::string(s) + "' has " + std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(rank));
  }
  Eigen::MatrixXcd m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    const auto cols = split(rows[static_cast<std::size_t>(i)], ',');
    if (static_cast<int>(cols.size()) != rank) {
      throw ValidationError("matrix row '" + std::string(rows[static_cast<std::size_t>(i)]) + "' has wrong length");
    }
    for (int j = 0; j < rank; ++j) m(i, j) = parse_complex(cols[static_cast<std::size_t>(j)]);
  }
  return m;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("empty complex number");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.remove_suffix(1);
  // split at the last sign that is not part of an exponent
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag = [](std::string_view t) {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split_at == std::string_view::npos) return {0.0, imag(s)};
  return {parse_double(s.substr(0, split_at)), imag(s.substr(split_at))};
}

RefinementMask parse_mask_text(std::string_view text, long precision_bits) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ValidationError("mask line " + std::to_string(lineno) + ": expected key = value");
    kv[std::string(trim(body.substr(0, eq)))] = std::string(trim(body.substr(eq + 1)));
  }
  for (const auto& [key, value] : kv) {
    if (key != "dilation-poly" && key != "dilation" && key != "rank" && key != "coeffs" && key != "translates" &&
        key != "phihat0" && key != "name") {
      throw ValidationError("unknown mask key '" + key + "'");
    }
  }

  const FieldOptions options{precision_bits, 1};
  std::optional<NumberField> field;
  if (kv.count("dilation-poly")) {
    field = make_field(parse_poly(kv["dilation-poly"]), options);
  } else if (kv.count("dilation")) {
    field = make_integer_dilation(parse_int(kv["dilation"]), options);
  }

  const std::string coeffs = kv.count("coeffs") ? kv["coeffs"] : "";
  if (coeffs.rfind("generator:", 0) == 0) {
    const std::string gen = coeffs.substr(10);
    if (gen != "dyadic") throw UnknownExampleError("unknown mask generator '" + gen + "'");
    return builtin_mask("dyadic");
  }
  if (!field) throw ValidationError("mask file needs dilation-poly or dilation");
  if (coeffs.empty()) throw ValidationError("mask file needs coeffs");
  if (!kv.count("translates")) throw ValidationError("mask file needs translates");

  const int rank = kv.count("rank") ? static_cast<int>(parse_int(kv["rank"])) : 1;
  if (rank < 1 || rank > 64) throw ValidationError("mask rank must be in 1..64");
  std::vector<Eigen::MatrixXcd> mats;
  for (auto item : split(coeffs, ';')) {
    if (rank == 1 && item.find('[') == std::string_view::npos) {
      mats.push_back(Eigen::MatrixXcd::Constant(1, 1, parse_complex(item)));
    } else {
      mats.push_back(parse_matrix(item, rank));
    }
  }
  std::vector<LaurentTranslate> translates;
  for (auto item : split(kv["translates"], ';')) translates.push_back(parse_translate(item));

  std::optional<Eigen::VectorXcd> phihat0;
  if (kv.count("phihat0")) {
    const auto parts = split(kv["phihat0"], ',');
    Eigen::VectorXcd v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(parts[i]);
    phihat0 = v;
  }
  const std::string name = kv.count("name") ? kv["name"] : "custom";
  return make_mask(std::move(*field), std::move(mats), std::move(translates), rank, phihat0, name);
}

RefinementMask load_mask_file(const std::string& path, long precision_bits) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read mask file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_mask_text(buf.str(), precision_bits);
}

RefinementMask resolve_mask(const std::string& spec, const std::optional<NumberField>& field, long precision_bits) {
  try {
    return builtin_mask(spec, field);
  } catch (const UnknownExampleError&) {
    if (!std::filesystem::exists(spec)) throw;
  }
  return load_mask_file(spec, precision_bits);
}

}  // namespace pisot
