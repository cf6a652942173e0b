#include "ctm/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ctm {

namespace {

constexpr std::array<const char*, 8> kPalette{"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string format_fixed(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drops a negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

// Widens a degenerate range and rounds it outwards to a tick step.
Range nice_range(double lo, double hi, double& tick) {
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double unit = raw / mag;
  tick = (unit < 1.5 ? 1.0 : unit < 3.5 ? 2.0 : unit < 7.5 ? 5.0 : 10.0) * mag;
  return {std::floor(lo / tick) * tick, std::ceil(hi / tick) * tick};
}

void svg_open(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << escape_xml(title) << "</text>\n";
  }
}

void svg_y_axis(std::ostream& out, Range y, double tick, auto&& to_y, const char* label) {
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  for (double v = y.lo; v <= y.hi + tick * 1e-9; v += tick) {
    const std::string pos = format_fixed(to_y(v), 2);
    out << "<line x1=\"" << x0 << "\" y1=\"" << pos << "\" x2=\"" << x1 << "\" y2=\"" << pos
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << x0 - 6 << "\" y=\"" << pos
        << "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-size=\"11\">"
        << format_sig9(std::abs(v) < tick * 1e-9 ? 0.0 : v) << "</text>\n";
  }
  out << "<text x=\"16\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 16 " << kHeight / 2
      << ")\" text-anchor=\"middle\" font-size=\"12\">" << label << "</text>\n";
}

}  // namespace

std::string format_sig9(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_trajectory_csv(std::ostream& out, const std::vector<Trajectory>& trajectories,
                          std::optional<std::size_t> window) {
  const std::size_t n = trajectories.empty() ? 0 : trajectories.front().values.size();
  for (const Trajectory& t : trajectories) {
    if (t.values.size() != n) throw std::invalid_argument("trajectories differ in length");
  }
  const std::size_t first = window && *window < n ? n - *window : 0;
  out << "step";
  for (const Trajectory& t : trajectories) out << ',' << t.process_id;
  out << '\n';
  for (std::size_t i = first; i < n; ++i) {
    out << i + 1;
    for (const Trajectory& t : trajectories) out << ',' << format_sig9(t.values[i]);
    out << '\n';
  }
}

void write_finals_csv(std::ostream& out, const SweepResult& sweep) {
  out << "process,run,final_log10\n";
  for (std::size_t i = 0; i < sweep.process_ids.size(); ++i) {
    for (std::size_t r = 0; r < sweep.finals[i].size(); ++r) {
      out << sweep.process_ids[i] << ',' << r << ',' << format_sig9(sweep.finals[i][r]) << '\n';
    }
  }
}

void write_stats_csv(std::ostream& out, const std::vector<std::string>& ids,
                     const std::vector<BoxplotStats>& stats) {
  out << "process,n,median,q1,q3,whisker_low,whisker_high,notch_low,notch_high\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const BoxplotStats& s = stats[i];
    out << ids[i] << ',' << s.n_samples << ',' << format_sig9(s.median) << ','
        << format_sig9(s.q1) << ',' << format_sig9(s.q3) << ',' << format_sig9(s.whisker_low)
        << ',' << format_sig9(s.whisker_high) << ',' << format_sig9(s.notch_low) << ','
        << format_sig9(s.notch_high) << '\n';
  }
}

void write_weights_csv(std::ostream& out,
                       const std::vector<std::pair<std::size_t, double>>& snapshot) {
  out << "k,weight\n";
  for (const auto& [k, w] : snapshot) out << k << ',' << format_sig9(w) << '\n';
}

void write_trajectory_svg(std::ostream& out, const std::vector<Trajectory>& trajectories,
                          std::optional<std::size_t> window, const std::string& title) {
  const std::size_t n = trajectories.empty() ? 0 : trajectories.front().values.size();
  const std::size_t first = window && *window < n ? n - *window : 0;

  double lo = 0.0;
  double hi = 0.0;
  bool any = false;
  for (const Trajectory& t : trajectories) {
    for (std::size_t i = first; i < t.values.size(); ++i) {
      if (!std::isfinite(t.values[i])) continue;
      lo = any ? std::min(lo, t.values[i]) : t.values[i];
      hi = any ? std::max(hi, t.values[i]) : t.values[i];
      any = true;
    }
  }
  double tick = 1.0;
  const Range y = nice_range(lo, hi, tick);
  const double x_lo = static_cast<double>(first + 1);
  const double x_hi = static_cast<double>(std::max<std::size_t>(n, first + 2));
  auto to_x = [&](double step) {
    return kLeft + (step - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  };
  auto to_y = [&](double v) {
    return kHeight - kBottom - (v - y.lo) / (y.hi - y.lo) * (kHeight - kTop - kBottom);
  };

  svg_open(out, title);
  svg_y_axis(out, y, tick, to_y, "log10 capital");
  out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"12\">step " << first + 1 << " to " << n
      << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
      << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (std::size_t t = 0; t < trajectories.size(); ++t) {
    const char* colour = kPalette[t % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
    bool leading = true;
    for (std::size_t i = first; i < n; ++i) {
      const double v = trajectories[t].values[i];
      if (!std::isfinite(v)) continue;
      if (!leading) out << ' ';
      out << format_fixed(to_x(static_cast<double>(i + 1)), 2) << ','
          << format_fixed(to_y(v), 2);
      leading = false;
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(t + 1);
    out << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kRight + 30 << "\" y2=\"" << ly << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kWidth - kRight + 36 << "\" y=\"" << ly
        << "\" dominant-baseline=\"middle\" font-size=\"12\">"
        << escape_xml(trajectories[t].process_id) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_boxplot_svg(std::ostream& out, const std::vector<std::string>& ids,
                       const std::vector<BoxplotStats>& stats, const std::string& title) {
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    const double a = std::min(stats[i].whisker_low, stats[i].notch_low);
    const double b = std::max(stats[i].whisker_high, stats[i].notch_high);
    lo = i == 0 ? a : std::min(lo, a);
    hi = i == 0 ? b : std::max(hi, b);
  }
  double tick = 1.0;
  const Range y = nice_range(lo, hi, tick);
  auto to_y = [&](double v) {
    return kHeight - kBottom - (v - y.lo) / (y.hi - y.lo) * (kHeight - kTop - kBottom);
  };
  const double slot = (kWidth - kLeft - kRight) / static_cast<double>(std::max<std::size_t>(ids.size(), 1));

  svg_open(out, title);
  svg_y_axis(out, y, tick, to_y, "final log10 capital");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const BoxplotStats& s = stats[i];
    const double cx = kLeft + slot * (static_cast<double>(i) + 0.5);
    const double half = slot * 0.25;
    const double notch = half * 0.5;
    const char* colour = kPalette[i % kPalette.size()];
    auto pt = [&](double x, double v) { return format_fixed(x, 2) + ',' + format_fixed(to_y(v), 2); };
    // Notched box outline, clockwise from the lower-left corner.
    out << "<polygon fill=\"" << colour << "\" fill-opacity=\"0.3\" stroke=\"" << colour
        << "\" points=\"" << pt(cx - half, s.q1) << ' ' << pt(cx - half, s.notch_low) << ' '
        << pt(cx - notch, s.median) << ' ' << pt(cx - half, s.notch_high) << ' '
        << pt(cx - half, s.q3) << ' ' << pt(cx + half, s.q3) << ' '
        << pt(cx + half, s.notch_high) << ' ' << pt(cx + notch, s.median) << ' '
        << pt(cx + half, s.notch_low) << ' ' << pt(cx + half, s.q1) << "\"/>\n";
    out << "<line x1=\"" << format_fixed(cx - notch, 2) << "\" y1=\"" << format_fixed(to_y(s.median), 2)
        << "\" x2=\"" << format_fixed(cx + notch, 2) << "\" y2=\"" << format_fixed(to_y(s.median), 2)
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& [from, to] : {std::pair{s.q3, s.whisker_high}, std::pair{s.q1, s.whisker_low}}) {
      out << "<line x1=\"" << format_fixed(cx, 2) << "\" y1=\"" << format_fixed(to_y(from), 2)
          << "\" x2=\"" << format_fixed(cx, 2) << "\" y2=\"" << format_fixed(to_y(to), 2)
          << "\" stroke=\"black\"/>\n";
      out << "<line x1=\"" << format_fixed(cx - notch, 2) << "\" y1=\"" << format_fixed(to_y(to), 2)
          << "\" x2=\"" << format_fixed(cx + notch, 2) << "\" y2=\"" << format_fixed(to_y(to), 2)
          << "\" stroke=\"black\"/>\n";
    }
    out << "<text x=\"" << format_fixed(cx, 2) << "\" y=\"" << kHeight - kBottom + 18
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape_xml(ids[i]) << "</text>\n";
  }
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
      << "\" height=\"" << kHeight - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "</svg>\n";
}

}  // namespace ctm
