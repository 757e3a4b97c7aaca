#include "varregion/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace varregion {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string format_number(double x, int significant) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

namespace {

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string("field '") + key + "' must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  if (text.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("expected 're,im': '" + text + "'");
  }
  const std::string_view view(text);
  return {parse_real(view.substr(0, comma)), parse_real(view.substr(comma + 1))};
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into '" + path.string() + "'");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path resolve_output(const fs::path& path) {
  const char* dir = std::getenv("OVERRIDE_OUT_DIR");
  if (dir == nullptr || *dir == '\0' || path.is_absolute()) return path;
  return fs::path(dir) / path;
}

RegionRecord compute_region(const JanowskiParams& params, const EvalPoint& point, int theta_samples) {
  RegionRecord rec{params, point, {}, point.is_singleton(), {}};
  if (rec.singleton) {
    const cplx lam = point.z0() == 0.0 ? cplx(0.0) : point.lambda() / std::abs(point.lambda());
    rec.disk = {1.0 + params.B() * lam * point.z0(), 0.0};
    rec.boundary.samples.push_back({0.0, singleton_value(point, params)});
    return rec;
  }
  rec.disk = variability_disk(canonical_frame(point), params);
  rec.boundary = boundary_curve(point, params, theta_samples);
  return rec;
}

ordered_json to_json(const RegionRecord& r) {
  ordered_json j;
  j["params"] = {{"A", r.params.A()}, {"B", r.params.B()}};
  j["point"] = {{"z0", complex_json(r.point.z0())}, {"lambda", complex_json(r.point.lambda())}};
  j["center"] = complex_json(r.disk.center);
  j["radius"] = r.disk.radius;
  j["singleton"] = r.singleton;
  ordered_json boundary = ordered_json::array();
  for (const BoundarySample& s : r.boundary.samples) {
    boundary.push_back({{"theta", s.theta}, {"re", s.value.real()}, {"im", s.value.imag()}});
  }
  j["boundary"] = std::move(boundary);
  return j;
}

RegionRecord region_from_json(const json& j) {
  try {
    const json& p = field(j, "params");
    const JanowskiParams params(field(p, "A").get<double>(), field(p, "B").get<double>());
    const json& pt = field(j, "point");
    const EvalPoint point(complex_from(field(pt, "z0"), "z0"), complex_from(field(pt, "lambda"), "lambda"));
    RegionRecord rec{params, point, {}, field(j, "singleton").get<bool>(), {}};
    rec.disk.center = complex_from(field(j, "center"), "center");
    rec.disk.radius = field(j, "radius").get<double>();
    const json& b = field(j, "boundary");
    if (!b.is_array()) throw std::invalid_argument("field 'boundary' must be an array");
    for (const json& s : b) {
      rec.boundary.samples.push_back(
          {field(s, "theta").get<double>(), {field(s, "re").get<double>(), field(s, "im").get<double>()}});
    }
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed region record: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("region record violates a constraint: ") + e.what());
  }
}

std::string region_csv(const RegionRecord& r) {
  std::string out = "theta,re,im\n";
  for (const BoundarySample& s : r.boundary.samples) {
    out += format_number(s.theta) + "," + format_number(s.value.real()) + "," +
           format_number(s.value.imag()) + "\n";
  }
  return out;
}

std::string region_svg(const RegionRecord& r, const std::vector<CloudPoint>& cloud) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 0.05 * kSize;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  const auto grow = [&](cplx v) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  };
  for (const BoundarySample& s : r.boundary.samples) grow(s.value);
  for (const CloudPoint& c : cloud) grow(c.value);
  double span = std::max(xmax - xmin, ymax - ymin);
  if (!(span > 0.0)) span = 1.0;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  const double scale = (kSize - 2.0 * kMargin) / span;
  const auto px = [&](double x) { return format_number(kSize / 2 + (x - cx) * scale, 10); };
  const auto py = [&](double y) { return format_number(kSize / 2 - (y - cy) * scale, 10); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- generated by varregion -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  const double half = span / 2 + kMargin / scale;
  if (cy - half <= 0.0 && 0.0 <= cy + half) {
    out += "<line x1=\"0\" y1=\"" + py(0.0) + "\" x2=\"800\" y2=\"" + py(0.0) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (cx - half <= 0.0 && 0.0 <= cx + half) {
    out += "<line x1=\"" + px(0.0) + "\" y1=\"0\" x2=\"" + px(0.0) +
           "\" y2=\"800\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }

  if (r.boundary.size() == 1) {
    const cplx v = r.boundary.samples.front().value;
    out += "<circle cx=\"" + px(v.real()) + "\" cy=\"" + py(v.imag()) + "\" r=\"3\" fill=\"black\"/>\n";
  } else {
    out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
      const cplx v = r.boundary.samples[i].value;
      if (i != 0) out += ' ';
      out += px(v.real()) + "," + py(v.imag());
    }
    out += "\"/>\n";
  }

  for (const CloudPoint& c : cloud) {
    const char* color = c.verdict == Verdict::Outside ? "red" : c.verdict == Verdict::Boundary ? "blue" : "#2a7f2a";
    out += "<rect x=\"" + px(c.value.real()) + "\" y=\"" + py(c.value.imag()) +
           "\" width=\"1\" height=\"1\" fill=\"" + color + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["suite_name"] = r.suite_name;
  j["parameter_sets"] = r.parameter_sets;
  j["samples"] = r.samples;
  j["max_violation"] = r.max_violation;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  ordered_json w = ordered_json::array();
  for (const Witness& x : r.witnesses) w.push_back({{"inputs", x.inputs}, {"observed", x.observed}});
  j["witnesses"] = std::move(w);
  ordered_json m = ordered_json::object();
  for (const auto& [k, v] : r.metrics) m[k] = v;
  j["metrics"] = std::move(m);
  return j;
}

std::string GridBlock::canonical() const {
  std::string out;
  for (const auto& [k, v] : values) out += k + "=" + format_number(v) + "\n";
  return out;
}

std::vector<GridBlock> parse_grid(const std::string& text) {
  static const std::vector<std::string> kKeys = {"A", "B", "lambda_re", "lambda_im", "z0_re", "z0_im"};
  static const std::vector<std::string> kRequired = {"A", "B", "z0_re"};

  std::vector<GridBlock> blocks;
  std::optional<GridBlock> current;
  const auto close = [&]() {
    if (!current) return;
    for (const std::string& k : kRequired) {
      if (!current->values.contains(k)) {
        throw GridParseError(current->first_line, "block is missing key '" + k + "'");
      }
    }
    for (const char* k : {"lambda_re", "lambda_im", "z0_im"}) current->values.try_emplace(k, 0.0);
    blocks.push_back(std::move(*current));
    current.reset();
  };

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      close();
      continue;
    }
    if (line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw GridParseError(lineno, "expected key=value");
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw GridParseError(lineno, "unknown key '" + key + "'");
    }
    double value = 0.0;
    try {
      value = parse_real(std::string_view(line).substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw GridParseError(lineno, e.what());
    }
    if (!current) current = GridBlock{lineno, {}};
    if (!current->values.emplace(key, value).second) {
      throw GridParseError(lineno, "duplicate key '" + key + "'");
    }
  }
  close();
  return blocks;
}

std::string stable_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace varregion
