#include "peakon/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "peakon/error.hpp"

namespace peakon {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& j, const char* what, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(ErrorKind::parse, std::string(what) + " must be a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k)) fail(ErrorKind::parse, std::string(what) + " lacks \"" + k + "\"");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) fail(ErrorKind::parse, std::string(what) + " has unknown key \"" + key + "\"");
  }
}

double number(const json& j, const char* key, const char* what) {
  const json& v = j.at(key);
  if (!v.is_number()) fail(ErrorKind::parse, std::string(what) + " field \"" + key + "\" must be a number");
  return v.get<double>();
}

const json& array(const json& j, const char* key, const char* what) {
  const json& v = j.at(key);
  if (!v.is_array()) fail(ErrorKind::parse, std::string(what) + " field \"" + key + "\" must be an array");
  return v;
}

Side parse_side(const json& v) {
  if (v == "right") return Side::right;
  if (v == "left") return Side::left;
  fail(ErrorKind::parse, "side must be \"left\" or \"right\"");
}

SpectralData spectral_from_json(const json& j, bool allow_extras) {
  if (allow_extras) {
    require_keys(j, "spectral document", {"side", "entries"}, {"other_side", "coupling"});
    if (j.contains("other_side")) spectral_from_json(j.at("other_side"), false);
    if (j.contains("coupling")) {
      for (const auto& c : array(j, "coupling", "spectral document")) {
        require_keys(c, "coupling entry", {"lambda", "c_plus", "c_minus"});
        number(c, "lambda", "coupling entry");
        number(c, "c_plus", "coupling entry");
        number(c, "c_minus", "coupling entry");
      }
    }
  } else {
    require_keys(j, "spectral document", {"side", "entries"});
  }
  const Side side = parse_side(j.at("side"));
  std::vector<SpectralEntry> entries;
  for (const auto& e : array(j, "entries", "spectral document")) {
    require_keys(e, "spectral entry", {"lambda", "gamma2"});
    entries.push_back({number(e, "lambda", "spectral entry"), number(e, "gamma2", "spectral entry")});
  }
  return SpectralData(side, std::move(entries));
}

ordered atoms_json(const DiscreteMeasure& omega) {
  ordered atoms = ordered::array();
  for (const auto& a : omega.atoms()) atoms.push_back(ordered{{"x", a.x}, {"w", a.w}});
  return atoms;
}

ordered spectral_json(const SpectralData& d) {
  ordered entries = ordered::array();
  for (const auto& e : d.entries()) entries.push_back(ordered{{"lambda", e.lambda}, {"gamma2", e.gamma2}});
  return ordered{{"side", to_string(d.side())}, {"entries", entries}};
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

}  // namespace

DiscreteMeasure parse_measure(std::string_view text) {
  const json j = parse_json(text);
  require_keys(j, "measure document", {"atoms"});
  std::vector<Atom> atoms;
  for (const auto& a : array(j, "atoms", "measure document")) {
    require_keys(a, "atom", {"x", "w"});
    atoms.push_back({number(a, "x", "atom"), number(a, "w", "atom")});
  }
  return make_measure(std::move(atoms));
}

std::string format_measure(const DiscreteMeasure& omega) { return dump(ordered{{"atoms", atoms_json(omega)}}); }

SpectralData parse_spectral(std::string_view text) { return spectral_from_json(parse_json(text), true); }

std::string format_spectral(const SpectralData& d) { return dump(spectral_json(d)); }

std::string format_forward(const SpectralData& primary, const SpectralData& other,
                           std::span<const CouplingEntry> coupling) {
  ordered j = spectral_json(primary);
  j["other_side"] = spectral_json(other);
  ordered table = ordered::array();
  for (const auto& c : coupling) {
    table.push_back(ordered{{"lambda", c.lambda}, {"c_plus", c.c_plus}, {"c_minus", c.c_minus}});
  }
  j["coupling"] = table;
  return dump(j);
}

std::string format_frames(std::span<const Frame> frames) {
  ordered list = ordered::array();
  for (const auto& f : frames) list.push_back(ordered{{"t", f.t}, {"atoms", atoms_json(f.omega)}});
  return dump(ordered{{"frames", list}});
}

std::string format_phase_shifts(std::span<const PhaseShift> shifts, double t0) {
  ordered list = ordered::array();
  for (const auto& p : shifts) {
    list.push_back(ordered{{"lambda", p.lambda}, {"eta", p.eta}, {"eta_from_left", p.eta_from_left}});
  }
  return dump(ordered{{"t0", t0}, {"phase_shifts", list}});
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_row(std::span<const double> values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) line += ',';
    line += format_number(values[i]);
  }
  line += '\n';
  return line;
}

std::string measure_digest(const DiscreteMeasure& omega) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : format_measure(omega)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
}

}  // namespace peakon
