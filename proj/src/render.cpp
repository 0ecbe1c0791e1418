#include "webkup/render.hpp"

#include <algorithm>
#include <sstream>

#include "webkup/weights.hpp"

namespace webkup {

namespace {

constexpr int kStep = 40;
constexpr int kMargin = 40;

const char* marker(int label) {
    switch (label) {
        case 0: return "◦";
        case 1: return "+";
        case 2: return "−";
        default: return "×";
    }
}

const char* state_color(int j) {
    if (j > 0) return "#d62728";
    if (j < 0) return "#1f77b4";
    return "#2ca02c";
}

class Canvas {
public:
    void line(int x1, int y1, int x2, int y2, const std::string& style) {
        os_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" " << style
            << "/>\n";
    }

    // A strand segment or rung carrying `label` units.
    void edge(int x1, int y1, int x2, int y2, int label) {
        const std::string ink = "stroke=\"black\" stroke-width=\"1.5\"";
        if (label == 1) line(x1, y1, x2, y2, ink);
        if (label == 2) {
            int ox = y1 == y2 ? 0 : 2, oy = y1 == y2 ? 2 : 0;
            line(x1 - ox, y1 - oy, x2 - ox, y2 - oy, ink);
            line(x1 + ox, y1 + oy, x2 + ox, y2 + oy, ink);
        }
        if (label == 3) line(x1, y1, x2, y2, "stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"2 3\"");
    }

    void overlay(int x1, int y1, int x2, int y2, int state) {
        int ox = y1 == y2 ? 0 : 6, oy = y1 == y2 ? -6 : 0;
        line(x1 + ox, y1 + oy, x2 + ox, y2 + oy,
             std::string("class=\"flow\" stroke=\"") + state_color(state) + "\" stroke-width=\"1\" stroke-dasharray=\"4 2\"");
    }

    void text(int x, int y, const std::string& s, const std::string& cls) {
        os_ << "<text class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"middle\">" << s
            << "</text>\n";
    }

    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

}  // namespace

std::string render_svg(const LadderWeb& w, const Flow* flow) {
    const int n = static_cast<int>(w.strands());
    const int T = static_cast<int>(w.slices().size());
    const int width = 2 * kMargin + std::max(0, n - 1) * kStep;
    const int height = 2 * kMargin + std::max(1, T) * kStep;
    auto x_of = [&](int i) { return kMargin + i * kStep; };
    auto y_of = [&](int t) { return height - kMargin - t * kStep; };
    if (flow && flow->levels.size() != static_cast<std::size_t>(T) + 1) flow = nullptr;

    Canvas c;
    auto segment = [&](int i, int t, int y1, int y2) {
        int label = w.level(static_cast<std::size_t>(t))[static_cast<std::size_t>(i)];
        c.edge(x_of(i), y1, x_of(i), y2, label);
        if (flow && (label == 1 || label == 2))
            c.overlay(x_of(i), y1, x_of(i), y2, color_sum(strand_colors(flow->levels[static_cast<std::size_t>(t)], i)));
    };
    if (T == 0) {
        for (int i = 0; i < n; ++i) segment(i, 0, y_of(0), y_of(1));
    }
    for (int t = 0; t < T; ++t) {
        const Slice& s = w.slices()[static_cast<std::size_t>(t)];
        const int mid = y_of(t) - kStep / 2;
        for (int i = 0; i < n; ++i) {
            segment(i, t, y_of(t), mid);
            segment(i, t + 1, mid, y_of(t + 1));
        }
        c.edge(x_of(s.index - 1), mid, x_of(s.index), mid, s.power);
        if (flow) {
            ColorSet r = rung_colors(w, *flow, static_cast<std::size_t>(t));
            if (color_count(r) == 1 || color_count(r) == 2) c.overlay(x_of(s.index - 1), mid, x_of(s.index), mid, color_sum(r));
        }
    }
    const int top = T == 0 ? 1 : T;
    for (int i = 0; i < n; ++i) {
        c.text(x_of(i), y_of(0) + 20, marker(w.bottom()[static_cast<std::size_t>(i)]), "boundary");
        c.text(x_of(i), y_of(top) - 12, marker(w.top()[static_cast<std::size_t>(i)]), "boundary");
    }
    if (flow) {
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            int label = w.top()[static_cast<std::size_t>(i)];
            if (label != 1 && label != 2) continue;
            int j = flow->boundary.at(k++);
            c.text(x_of(i), y_of(top) - 26, j > 0 ? "1" : j < 0 ? "m" : "0", "state");
        }
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
       << "<style>text{font-family:monospace;font-size:12px}</style>\n"
       << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
       << c.str() << "</svg>\n";
    return os.str();
}

}  // namespace webkup
