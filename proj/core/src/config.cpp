#include "wellsim/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wellsim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// key -> (value, consumed) with duplicate detection.
class KeyTable {
 public:
  explicit KeyTable(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty())
        throw ConfigError("config line " + std::to_string(line_no) +
                          ": empty key or value");
      if (!entries_.emplace(key, value).second)
        throw ConfigError("duplicate config key: " + key);
    }
  }

  // Returns the value and marks the key consumed; empty optional if absent.
  const std::string* take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    consumed_.insert(key);
    return &it->second;
  }

  void reject_unconsumed() const {
    for (const auto& [key, value] : entries_)
      if (consumed_.count(key) == 0)
        throw ConfigError("unknown config key: " + key);
  }

  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
  std::set<std::string> consumed_;
};

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse number '" + value + "'");
  }
  if (used != value.size())
    throw ConfigError(key + ": trailing characters in number '" + value + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t out = 0;
  try {
    out = std::stoull(value, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": cannot parse unsigned integer '" + value + "'");
  }
  if (used != value.size())
    throw ConfigError(key + ": trailing characters in '" + value + "'");
  return out;
}

int parse_count(const std::string& key, const std::string& value) {
  const std::uint64_t v = parse_u64(key, value);
  if (v > 1000000) throw ConfigError(key + ": collision count too large");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on") return true;
  if (value == "false" || value == "off") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

}  // namespace

std::string to_string(WeightMode m) {
  switch (m) {
    case WeightMode::Amplitude:
      return "amplitude";
    case WeightMode::Probability:
      return "probability";
    case WeightMode::ProjectedBranch:
      return "projected_branch";
  }
  return "amplitude";
}

std::string to_string(SidePolicy p) {
  switch (p) {
    case SidePolicy::Independent:
      return "independent";
    case SidePolicy::Shared:
      return "shared";
    case SidePolicy::Mirrored:
      return "mirrored";
    case SidePolicy::FixedLeft:
      return "fixed_left";
    case SidePolicy::FixedRight:
      return "fixed_right";
  }
  return "independent";
}

std::string to_string(SystemKind s) {
  return s == SystemKind::Pair ? "pair" : "single";
}

std::string to_string(TerminalWell w) {
  switch (w) {
    case TerminalWell::Left:
      return "left";
    case TerminalWell::Right:
      return "right";
    case TerminalWell::Mixed:
      return "mixed";
  }
  return "mixed";
}

WeightMode parse_weight_mode(const std::string& value) {
  if (value == "amplitude") return WeightMode::Amplitude;
  if (value == "probability") return WeightMode::Probability;
  if (value == "projected_branch") return WeightMode::ProjectedBranch;
  throw ConfigError("unknown weight mode '" + value + "'");
}

SidePolicy parse_side_policy(const std::string& value) {
  if (value == "independent") return SidePolicy::Independent;
  if (value == "shared") return SidePolicy::Shared;
  if (value == "mirrored") return SidePolicy::Mirrored;
  if (value == "fixed_left") return SidePolicy::FixedLeft;
  if (value == "fixed_right") return SidePolicy::FixedRight;
  throw ConfigError("unknown side policy '" + value + "'");
}

RunConfig parse_config_text(const std::string& text) {
  KeyTable keys(text);
  RunConfig cfg;

  if (const auto* v = keys.take("run.system")) {
    if (*v == "pair")
      cfg.system = SystemKind::Pair;
    else if (*v == "single")
      cfg.system = SystemKind::Single;
    else
      throw ConfigError("run.system: expected pair or single");
  }
  if (const auto* v = keys.take("run.seed")) cfg.seed = parse_u64("run.seed", *v);
  if (const auto* v = keys.take("run.sample_interval"))
    cfg.sample_interval = parse_double("run.sample_interval", *v);
  if (const auto* v = keys.take("run.mode")) cfg.mode = parse_weight_mode(*v);
  if (const auto* v = keys.take("run.side_policy"))
    cfg.side_policy = parse_side_policy(*v);
  if (const auto* v = keys.take("run.perturb_both"))
    cfg.perturb_both = parse_bool("run.perturb_both", *v);
  if (const auto* v = keys.take("output.dir")) cfg.output_dir = *v;

  const auto load_molecule = [&](const std::string& prefix,
                                 MoleculeConfig fallback) {
    MoleculeConfig m = fallback;
    if (const auto* v = keys.take(prefix + ".omega0"))
      m.freq.omega0 = parse_double(prefix + ".omega0", *v);
    if (const auto* v = keys.take(prefix + ".omega1"))
      m.freq.omega1 = parse_double(prefix + ".omega1", *v);
    if (const auto* v = keys.take(prefix + ".omegap"))
      m.freq.omegaP = parse_double(prefix + ".omegap", *v);
    double a_re = m.amps.a.real(), a_im = m.amps.a.imag();
    double b_re = m.amps.b.real(), b_im = m.amps.b.imag();
    if (const auto* v = keys.take(prefix + ".a_re"))
      a_re = parse_double(prefix + ".a_re", *v);
    if (const auto* v = keys.take(prefix + ".a_im"))
      a_im = parse_double(prefix + ".a_im", *v);
    if (const auto* v = keys.take(prefix + ".b_re"))
      b_re = parse_double(prefix + ".b_re", *v);
    if (const auto* v = keys.take(prefix + ".b_im"))
      b_im = parse_double(prefix + ".b_im", *v);
    m.amps = {cplx{a_re, a_im}, cplx{b_re, b_im}};
    return m;
  };
  cfg.mol_a = load_molecule("mol_a", MoleculeConfig{});
  cfg.mol_b = load_molecule("mol_b", cfg.mol_a);

  // Phases phase1..phaseK, contiguous.
  int max_phase = 0;
  for (const auto& [key, value] : keys.entries()) {
    if (key.rfind("phase", 0) != 0) continue;
    const auto dot = key.find('.');
    if (dot == std::string::npos) continue;
    const std::string num = key.substr(5, dot - 5);
    if (num.empty() ||
        num.find_first_not_of("0123456789") != std::string::npos)
      continue;
    if (num.size() > 4)
      throw ConfigError("implausible phase number in key: " + key);
    max_phase = std::max(max_phase, std::stoi(num));
  }
  for (int n = 1; n <= max_phase; ++n) {
    const std::string prefix = "phase" + std::to_string(n);
    PhaseSpec p;
    p.mode = cfg.mode;
    p.label = prefix;
    const auto* collisions = keys.take(prefix + ".collisions");
    if (!collisions)
      throw ConfigError(prefix + ".collisions is required (phases must be "
                        "numbered contiguously from 1)");
    p.n_collisions = parse_count(prefix + ".collisions", *collisions);
    if (const auto* v = keys.take(prefix + ".interaction"))
      p.interaction_on = parse_bool(prefix + ".interaction", *v);
    const auto* t1 = keys.take(prefix + ".t1");
    const auto* t2 = keys.take(prefix + ".t2");
    if (p.interaction_on) {
      if (!t1 || !t2)
        throw ConfigError(prefix + ": t1 and t2 are required while the "
                          "interaction is on");
      p.t1 = parse_double(prefix + ".t1", *t1);
      p.t2 = parse_double(prefix + ".t2", *t2);
    } else {
      if (t1) p.t1 = parse_double(prefix + ".t1", *t1);
      if (t2) p.t2 = parse_double(prefix + ".t2", *t2);
    }
    if (const auto* v = keys.take(prefix + ".interval_base"))
      p.interval_base = parse_double(prefix + ".interval_base", *v);
    if (const auto* v = keys.take(prefix + ".interval_jitter"))
      p.interval_jitter = parse_double(prefix + ".interval_jitter", *v);
    if (const auto* v = keys.take(prefix + ".mode"))
      p.mode = parse_weight_mode(*v);
    if (const auto* v = keys.take(prefix + ".label")) p.label = *v;
    cfg.phases.push_back(std::move(p));
  }

  keys.reject_unconsumed();
  validate_config(cfg);
  return cfg;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "run.system = " << to_string(cfg.system) << "\n";
  out << "run.seed = " << cfg.seed << "\n";
  out << "run.sample_interval = " << g17(cfg.sample_interval) << "\n";
  out << "run.mode = " << to_string(cfg.mode) << "\n";
  out << "run.side_policy = " << to_string(cfg.side_policy) << "\n";
  out << "run.perturb_both = " << (cfg.perturb_both ? "true" : "false")
      << "\n";
  out << "output.dir = " << cfg.output_dir << "\n";
  const auto molecule = [&](const std::string& prefix,
                            const MoleculeConfig& m) {
    out << prefix << ".omega0 = " << g17(m.freq.omega0) << "\n";
    out << prefix << ".omega1 = " << g17(m.freq.omega1) << "\n";
    out << prefix << ".omegap = " << g17(m.freq.omegaP) << "\n";
    out << prefix << ".a_re = " << g17(m.amps.a.real()) << "\n";
    out << prefix << ".a_im = " << g17(m.amps.a.imag()) << "\n";
    out << prefix << ".b_re = " << g17(m.amps.b.real()) << "\n";
    out << prefix << ".b_im = " << g17(m.amps.b.imag()) << "\n";
  };
  molecule("mol_a", cfg.mol_a);
  molecule("mol_b", cfg.mol_b);
  int n = 1;
  for (const PhaseSpec& p : cfg.phases) {
    const std::string prefix = "phase" + std::to_string(n++);
    out << prefix << ".collisions = " << p.n_collisions << "\n";
    out << prefix << ".interaction = " << (p.interaction_on ? "on" : "off")
        << "\n";
    out << prefix << ".t1 = " << g17(p.t1) << "\n";
    out << prefix << ".t2 = " << g17(p.t2) << "\n";
    out << prefix << ".interval_base = " << g17(p.interval_base) << "\n";
    out << prefix << ".interval_jitter = " << g17(p.interval_jitter) << "\n";
    out << prefix << ".mode = " << to_string(p.mode) << "\n";
    out << prefix << ".label = " << p.label << "\n";
  }
  return out.str();
}

}  // namespace wellsim
