#include "wellsim/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wellsim/config.hpp"

namespace wellsim {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string format_entry(const cplx& c) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string timeseries_csv(const RunRecord& rec) {
  std::ostringstream out;
  out << "time,reduced_left_A,reduced_left_B,localisation_score,purity_A,"
         "purity_B,norm_contraction,phase_label\n";
  for (const Sample& s : rec.samples) {
    const std::string label =
        s.phase_index >= 0 &&
                s.phase_index < static_cast<int>(rec.phase_labels.size())
            ? rec.phase_labels[static_cast<std::size_t>(s.phase_index)]
            : "none";
    out << format_g17(s.time) << ',' << format_g17(s.reduced_left_a) << ','
        << format_g17(s.reduced_left_b) << ',' << format_g17(s.score) << ','
        << format_g17(s.purity_a) << ',' << format_g17(s.purity_b) << ','
        << format_g17(s.contraction) << ',' << label << '\n';
  }
  return out.str();
}

std::string snapshot_text(const Snapshot& snap) {
  std::ostringstream out;
  out << "# label=" << snap.label << " time=" << format_g17(snap.time)
      << " dim=" << snap.dim << '\n';
  for (std::size_t i = 0; i < snap.dim; ++i) {
    for (std::size_t j = 0; j < snap.dim; ++j) {
      if (j) out << ' ';
      out << format_entry(snap.rho[i * snap.dim + j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string summary_text(const RunRecord& rec) {
  const Sample& last = rec.samples.back();
  std::ostringstream out;
  out << "system: " << to_string(rec.config_echo.system) << '\n';
  out << "seed: " << rec.config_echo.seed << '\n';
  out << "phases: " << rec.config_echo.phases.size() << '\n';
  out << "collisions: " << rec.collisions.size() << '\n';
  out << "samples: " << rec.samples.size() << '\n';
  out << "final_time: " << format_g17(last.time) << '\n';
  out << "terminal_score: " << format_g17(last.score) << '\n';
  out << "terminal_well_A: " << to_string(rec.terminal_a) << '\n';
  out << "terminal_well_B: "
      << (rec.config_echo.system == SystemKind::Pair
              ? to_string(rec.terminal_b)
              : std::string("n/a"))
      << '\n';
  out << "terminal_reduced_left_A: " << format_g17(last.reduced_left_a)
      << '\n';
  out << "terminal_reduced_left_B: " << format_g17(last.reduced_left_b)
      << '\n';
  out << "terminal_purity_A: " << format_g17(last.purity_a) << '\n';
  out << "terminal_purity_B: " << format_g17(last.purity_b) << '\n';
  out << "last_contraction: " << format_g17(last.contraction) << '\n';
  return out.str();
}

OutputBundle write_bundle(const RunRecord& rec,
                          const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());

  OutputBundle bundle;
  bundle.timeseries = dir / "timeseries.csv";
  write_file(bundle.timeseries, timeseries_csv(rec));
  for (const Snapshot& snap : rec.snapshots) {
    const auto path = dir / ("snapshot_" + snap.label + ".txt");
    write_file(path, snapshot_text(snap));
    bundle.snapshots.push_back(path);
  }
  bundle.summary = dir / "summary.txt";
  write_file(bundle.summary, summary_text(rec));
  bundle.config_echo = dir / "config_echo.cfg";
  write_file(bundle.config_echo, serialize_config(rec.config_echo));
  return bundle;
}

}  // namespace wellsim
