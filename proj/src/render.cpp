#include "ratnc/render.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace ratnc {

std::string ascii_diagram(const DyckPath& d) {
  const auto& p = d.pair();
  int rows = 2 * p.a + 1, cols = 2 * p.b + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  auto put = [&](int r, int c, char ch, bool force = false) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) return;
    if (force || canvas[r][c] == ' ') canvas[r][c] = ch;
  };
  // diagonal y = (a/b) x, marked at half-steps
  for (int cx = 0; cx <= 2 * p.b; ++cx) {
    double y = static_cast<double>(p.a) * cx / (2 * p.b);
    put(2 * p.a - static_cast<int>(std::lround(2 * y)), cx, '.');
  }
  // lasers drawn before the path so the path wins collisions
  for (auto [i, t] : laser_set(d)) {
    long long hi = d.height(i);
    for (int cx = 2 * i; cx <= 2 * (t + 1); ++cx) {
      double y = hi + static_cast<double>(p.a) * (cx - 2.0 * i) / (2 * p.b);
      if (y > p.a) break;
      put(2 * p.a - static_cast<int>(std::lround(2 * y)), cx, '*', true);
    }
  }
  for (int k = 1; k <= p.b; ++k) {
    int y = static_cast<int>(d.height(k));
    put(2 * (p.a - y), 2 * k - 1, '-', true);
    put(2 * (p.a - y), 2 * k, '+', true);
    for (long long h = d.height(k - 1); h < d.height(k); ++h)
      put(2 * static_cast<int>(p.a - h) - 1, 2 * (k - 1), '|', true);
  }
  put(2 * p.a, 0, '+', true);
  for (int k = 1; k <= p.b - 1; ++k)
    put(2 * static_cast<int>(p.a - d.height(k)), 2 * k,
        static_cast<char>('0' + k % 10), true);
  std::ostringstream os;
  for (const auto& line : canvas) {
    std::size_t end = line.find_last_not_of(' ');
    os << (end == std::string::npos ? "" : line.substr(0, end + 1)) << '\n';
  }
  return os.str();
}

namespace {

const int kUnit = 40;

void svg_line(std::ostringstream& os, double x1, double y1, double x2,
              double y2, const char* style) {
  os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
     << "\" y2=\"" << y2 << "\" " << style << "/>\n";
}

}  // namespace

std::string svg_diagram(const DyckPath& d) {
  const auto& p = d.pair();
  LabeledPair pq = pi_map(d);
  double w = p.b * kUnit, h = p.a * kUnit;
  double disk_r = std::max(w, h) / 2.0;
  double disk_cx = w + disk_r + 2 * kUnit, disk_cy = h / 2.0;
  double total_w = w + 2 * disk_r + 3.5 * kUnit;
  auto X = [&](double x) { return x * kUnit; };
  auto Y = [&](double y) { return h - y * kUnit; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << total_w << "\" height=\"" << h + kUnit
     << "\" viewBox=\"0 " << -kUnit / 2 << " " << total_w << " "
     << h + kUnit << "\">\n";
  for (int x = 0; x <= p.b; ++x)
    svg_line(os, X(x), Y(0), X(x), Y(p.a),
             "stroke=\"#ddd\" stroke-width=\"1\"");
  for (int y = 0; y <= p.a; ++y)
    svg_line(os, X(0), Y(y), X(p.b), Y(y),
             "stroke=\"#ddd\" stroke-width=\"1\"");
  svg_line(os, X(0), Y(0), X(p.b), Y(p.a),
           "stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  // path
  os << "<polyline fill=\"none\" stroke=\"#000\" stroke-width=\"3\" points=\"";
  os << X(0) << "," << Y(0) << " ";
  for (int k = 1; k <= p.b; ++k) {
    os << X(k - 1) << "," << Y(static_cast<double>(d.height(k))) << " ";
    os << X(k) << "," << Y(static_cast<double>(d.height(k))) << " ";
  }
  os << "\"/>\n";
  // lasers, exact rational endpoints rendered in doubles
  for (auto [i, t] : laser_set(d)) {
    double hi = static_cast<double>(d.height(i));
    double xe = i + (d.height(t + 1) - hi) * static_cast<double>(p.b) / p.a;
    svg_line(os, X(i), Y(hi), X(xe), Y(static_cast<double>(d.height(t + 1))),
             "stroke=\"#c00\" stroke-width=\"1.5\"");
  }
  for (int k = 1; k <= p.b - 1; ++k)
    os << "<text x=\"" << X(k) + 4 << "\" y=\""
       << Y(static_cast<double>(d.height(k))) + 14
       << "\" font-size=\"12\">" << k << "</text>\n";
  // disk diagram: P solid, Q dashed, ranks annotated
  int n = p.b - 1;
  auto angle = [&](double i) { return M_PI / 2.0 - 2.0 * M_PI * (i - 1) / n; };
  auto px = [&](double i) { return disk_cx + disk_r * 0.85 * std::cos(angle(i)); };
  auto py = [&](double i) { return disk_cy - disk_r * 0.85 * std::sin(angle(i)); };
  os << "<circle cx=\"" << disk_cx << "\" cy=\"" << disk_cy << "\" r=\""
     << disk_r * 0.85 << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  auto draw_blocks = [&](const SetPartition& sp,
                         const std::vector<long long>& ranks,
                         const char* stroke, bool dashed) {
    for (int i = 0; i < sp.block_count(); ++i) {
      const auto& blk = sp.block(i);
      for (std::size_t t = 0; t + 1 < blk.size(); ++t)
        svg_line(os, px(blk[t]), py(blk[t]), px(blk[t + 1]), py(blk[t + 1]),
                 dashed ? "stroke=\"#06c\" stroke-width=\"1.5\" "
                          "stroke-dasharray=\"5 3\""
                        : "stroke=\"#000\" stroke-width=\"1.5\"");
      (void)stroke;
      os << "<text x=\"" << px(blk[0]) + (dashed ? -16 : 8) << "\" y=\""
         << py(blk[0]) + (dashed ? 12 : -6) << "\" font-size=\"10\" fill=\""
         << (dashed ? "#06c" : "#000") << "\">" << ranks[i] << "</text>\n";
    }
  };
  draw_blocks(pq.p(), pq.p_ranks(), "#000", false);
  draw_blocks(pq.q(), pq.q_ranks(), "#06c", true);
  for (int i = 1; i <= n; ++i) {
    os << "<circle cx=\"" << px(i) << "\" cy=\"" << py(i)
       << "\" r=\"2.5\" fill=\"#000\"/>\n";
    os << "<text x=\"" << disk_cx + disk_r * 0.95 * std::cos(angle(i)) - 4
       << "\" y=\"" << disk_cy - disk_r * 0.95 * std::sin(angle(i)) + 4
       << "\" font-size=\"12\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ratnc
