#include "bk/render.hpp"

#include <cstdio>
#include <sstream>

#include "bk/report.hpp"

namespace bk {

namespace {

struct Frame {
    Rat lo0, lo1, hi0, hi1;
    long long scale;
    bool one_d;

    double px(const Rat& v) const {
        Rat t = (v - lo0) * Rat(scale);
        return (double)t.num() / (double)t.den();
    }
    double py(const Rat& v) const {
        // SVG y grows downward
        Rat t = (hi1 - v) * Rat(scale);
        return (double)t.num() / (double)t.den();
    }
    double width() const { return px(hi0); }
    double height() const { return py(lo1); }
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void svg_line(std::ostringstream& out, const Frame& fr, const Rat& x1, const Rat& y1,
              const Rat& x2, const Rat& y2, const std::string& style) {
    out << "  <line x1=\"" << fmt(fr.px(x1)) << "\" y1=\"" << fmt(fr.py(y1)) << "\" x2=\""
        << fmt(fr.px(x2)) << "\" y2=\"" << fmt(fr.py(y2)) << "\" " << style << "/>\n";
}

// clip the line { <cov,(p0,p1)> + off = 0 } to the box; emit if it meets it
void clipped_wall(std::ostringstream& out, const Frame& fr, const Vec& cov, const Rat& off,
                  const std::string& style) {
    // collect intersections with the four box edges
    std::vector<std::pair<Rat, Rat>> pts;
    auto push = [&](const Rat& a, const Rat& b) {
        if (a < fr.lo0 || a > fr.hi0 || b < fr.lo1 || b > fr.hi1) return;
        for (const auto& q : pts)
            if (q.first == a && q.second == b) return;
        pts.push_back({a, b});
    };
    Rat c0 = cov.size() > 0 ? cov[0] : Rat(0);
    Rat c1 = cov.size() > 1 ? cov[1] : Rat(0);
    if (c1.sign() != 0) {
        push(fr.lo0, (-off - c0 * fr.lo0) / c1);
        push(fr.hi0, (-off - c0 * fr.hi0) / c1);
    }
    if (c0.sign() != 0) {
        push((-off - c1 * fr.lo1) / c0, fr.lo1);
        push((-off - c1 * fr.hi1) / c0, fr.hi1);
    }
    if (pts.size() >= 2)
        svg_line(out, fr, pts[0].first, pts[0].second, pts[1].first, pts[1].second, style);
}

} // namespace

std::string render_svg(const ConfigFile& cfg, const std::vector<std::string>& layers) {
    BuiltConfig built = build_config(cfg);
    const RootSystem& sys = *built.sys;
    if (sys.rank > 2) throw std::invalid_argument("rendering supports rank at most 2");

    Frame fr;
    fr.lo0 = cfg.box.lo[0];
    fr.hi0 = cfg.box.hi[0];
    fr.one_d = cfg.box.lo.size() < 2;
    fr.lo1 = fr.one_d ? Rat(-1) : cfg.box.lo[1];
    fr.hi1 = fr.one_d ? Rat(1) : cfg.box.hi[1];
    fr.scale = cfg.render_scale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(fr.width())
        << "\" height=\"" << fmt(fr.height()) << "\" viewBox=\"0 0 " << fmt(fr.width()) << " "
        << fmt(fr.height()) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#f4f4f0\"/>\n";

    const Vec& x = built.atlas.x;
    auto dim2 = [&](const Vec& v, size_t i) { return i < v.size() ? v[i] : Rat(0); };

    for (const std::string& layer : layers) {
        if (layer == "walls") {
            out << "<g id=\"layer-walls\">\n";
            std::string style = "stroke=\"#b8b8b8\" stroke-width=\"1\"";
            for (size_t r = 0; r < sys.roots.size(); ++r) {
                Vec cov(2, Rat(0));
                for (size_t j = 0; j < (size_t)sys.rank; ++j)
                    for (size_t i = 0; i < (size_t)sys.rank; ++i)
                        cov[j] += sys.roots[r][i] * sys.gram[i][j];
                // offsets whose wall meets the box (corner extremes)
                Rat lo = cov[0] * fr.lo0 + cov[1] * fr.lo1, hi = lo;
                for (int m = 0; m < 4; ++m) {
                    Rat v = cov[0] * ((m & 1) ? fr.hi0 : fr.lo0) +
                            cov[1] * ((m & 2) ? fr.hi1 : fr.lo1);
                    if (v < lo) lo = v;
                    if (hi < v) hi = v;
                }
                for (long long n = (-hi).ceil(); n <= (-lo).floor(); ++n)
                    clipped_wall(out, fr, cov, Rat(n), style);
            }
            out << "</g>\n";
        } else if (layer == "trace0") {
            out << "<g id=\"layer-trace0\">\n";
            std::string style = "stroke=\"#00008b\" stroke-width=\"3\"";
            // directions spanned by the innermost level
            const RootSubsystem& inner = built.skeleton.chain.levels.front();
            for (int m : inner.members) {
                const Vec& d = sys.roots[m];
                // long segment through x, clipped by the box corners
                Rat tmin(0), tmax(0);
                bool set = false;
                for (size_t c = 0; c < 2 && c < d.size(); ++c) {
                    if (d[c].sign() == 0) continue;
                    Rat a = ((c == 0 ? fr.lo0 : fr.lo1) - dim2(x, c)) / d[c];
                    Rat b = ((c == 0 ? fr.hi0 : fr.hi1) - dim2(x, c)) / d[c];
                    if (a > b) std::swap(a, b);
                    if (!set) { tmin = a; tmax = b; set = true; }
                    else {
                        if (a > tmin) tmin = a;
                        if (b < tmax) tmax = b;
                    }
                }
                if (set && tmin <= tmax)
                    svg_line(out, fr, dim2(x, 0) + tmin * d[0], dim2(x, 1) + tmin * dim2(d, 1),
                             dim2(x, 0) + tmax * d[0], dim2(x, 1) + tmax * dim2(d, 1), style);
            }
            out << "</g>\n";
        } else if (layer == "delta") {
            out << "<g id=\"layer-delta\">\n";
            // chambers whose closure contains the base fiber are drawn white
            Rat step(1, 2);
            for (Rat cx = fr.lo0; cx < fr.hi0; cx += step) {
                for (Rat cy = fr.lo1; cy < fr.hi1; cy += step) {
                    bool touches = cx <= dim2(x, 0) && dim2(x, 0) <= cx + step &&
                                   cy <= dim2(x, 1) && dim2(x, 1) <= cy + step;
                    if (!touches) continue;
                    out << "  <rect x=\"" << fmt(fr.px(cx)) << "\" y=\"" << fmt(fr.py(cy + step))
                        << "\" width=\"" << fmt((double)fr.scale / 2.0) << "\" height=\""
                        << fmt((double)fr.scale / 2.0)
                        << "\" fill=\"#ffffff\" stroke=\"#d0d0d0\"/>\n";
                }
            }
            out << "</g>\n";
        } else if (layer == "complementary") {
            out << "<g id=\"layer-complementary\">\n";
            std::string style =
                "stroke=\"#cc00cc\" stroke-width=\"2\" stroke-dasharray=\"6,4\"";
            for (const Vec& d : cfg.rays) {
                // farthest t with x + t d inside the box
                Rat tmax(-1);
                bool ok = true;
                Rat best(0);
                bool bset = false;
                for (size_t c = 0; c < 2 && c < d.size(); ++c) {
                    if (d[c].sign() == 0) continue;
                    Rat edge = d[c].sign() > 0 ? (c == 0 ? fr.hi0 : fr.hi1)
                                               : (c == 0 ? fr.lo0 : fr.lo1);
                    Rat t = (edge - dim2(x, c)) / d[c];
                    if (!bset || t < best) { best = t; bset = true; }
                }
                (void)tmax;
                (void)ok;
                if (bset && best.sign() > 0)
                    svg_line(out, fr, dim2(x, 0), dim2(x, 1), dim2(x, 0) + best * d[0],
                             dim2(x, 1) + best * dim2(d, 1), style);
            }
            out << "</g>\n";
        } else if (layer.rfind("theta=", 0) == 0) {
            auto t = Rat::parse(layer.substr(6));
            if (!t) throw std::invalid_argument("bad theta layer value");
            out << "<g id=\"layer-theta-" << t->num() << "-" << t->den() << "\">\n";
            Region theta = theta_region(*t, built.skeleton, built.atlas);
            auto it = theta.charts.find(0);
            if (it != theta.charts.end()) {
                const size_t dim = cfg.box.lo.size();
                for (const auto& poly : it->second) {
                    if (poly.empty(dim)) continue;
                    // draw the polygon's vertex hull outline
                    auto verts = poly.vertices(dim);
                    if (verts.size() < 2) continue;
                    for (const Vec& v : verts)
                        out << "  <circle cx=\"" << fmt(fr.px(dim2(v, 0))) << "\" cy=\""
                            << fmt(fr.py(dim2(v, 1)))
                            << "\" r=\"3\" fill=\"#e08000\" fill-opacity=\"0.7\"/>\n";
                }
            }
            out << "</g>\n";
        } else if (layer == "verdicts") {
            out << "<g id=\"layer-verdicts\">\n";
            for (const AtlasPoint& q : expand_queries(cfg)) {
                Verdict v = classify(q, built.skeleton, built.atlas, built.rays);
                std::string color = "#888888";
                switch (v.kind) {
                    case VerdictKind::TypeBearing: color = "#2060d0"; break;
                    case VerdictKind::AtypicalThmA: color = "#e0b000"; break;
                    case VerdictKind::AtypicalThmB: color = "#d04020"; break;
                    case VerdictKind::Undecided: color = "#888888"; break;
                }
                out << "  <circle cx=\"" << fmt(fr.px(dim2(q.coords, 0))) << "\" cy=\""
                    << fmt(fr.py(dim2(q.coords, 1))) << "\" r=\"2.5\" fill=\"" << color
                    << "\"/>\n";
            }
            out << "</g>\n";
        } else if (layer == "folds") {
            out << "<g id=\"layer-folds\" opacity=\"0.45\">\n";
            for (size_t f = 0; f < built.atlas.folds.size(); ++f) {
                const Fold& fold = built.atlas.folds[f];
                Vec cov(2, Rat(0));
                for (size_t j = 0; j < (size_t)sys.rank; ++j)
                    for (size_t i = 0; i < (size_t)sys.rank; ++i)
                        cov[j] += sys.roots[fold.root][i] * sys.gram[i][j];
                clipped_wall(out, fr, cov, fold.depth,
                             "stroke=\"#208020\" stroke-width=\"2\"");
                // the folded copy beyond the wall, drawn as a sheared outline
                out << "  <g transform=\"translate(4,4) skewX(-8)\">\n";
                clipped_wall(out, fr, cov, fold.depth,
                             "stroke=\"#208020\" stroke-width=\"1\" stroke-dasharray=\"3,3\"");
                out << "  </g>\n";
            }
            out << "</g>\n";
        } else {
            throw std::invalid_argument("unknown layer '" + layer + "'");
        }
    }

    // base point marker, always on top
    out << "<circle cx=\"" << fmt(fr.px(dim2(x, 0))) << "\" cy=\"" << fmt(fr.py(dim2(x, 1)))
        << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const ConfigFile& cfg) {
    BuiltConfig built = build_config(cfg);
    const int w = 41, h = 21;
    std::vector<std::string> grid(h, std::string(w, '.'));
    Rat lo0 = cfg.box.lo[0], hi0 = cfg.box.hi[0];
    Rat lo1 = cfg.box.lo.size() > 1 ? cfg.box.lo[1] : Rat(-1);
    Rat hi1 = cfg.box.hi.size() > 1 ? cfg.box.hi[1] : Rat(1);
    auto put = [&](const Rat& px, const Rat& py, char c) {
        Rat fx = (px - lo0) / (hi0 - lo0) * Rat(w - 1);
        Rat fy = (hi1 - py) / (hi1 - lo1) * Rat(h - 1);
        long long ix = (fx + Rat(1, 2)).floor();
        long long iy = (fy + Rat(1, 2)).floor();
        if (ix >= 0 && ix < w && iy >= 0 && iy < h) grid[iy][ix] = c;
    };
    for (const AtlasPoint& q : expand_queries(cfg)) {
        Verdict v = classify(q, built.skeleton, built.atlas, built.rays);
        char c = '?';
        switch (v.kind) {
            case VerdictKind::TypeBearing: c = 'T'; break;
            case VerdictKind::AtypicalThmA: c = 'A'; break;
            case VerdictKind::AtypicalThmB: c = 'B'; break;
            case VerdictKind::Undecided: c = 'U'; break;
        }
        put(q.coords[0], q.coords.size() > 1 ? q.coords[1] : Rat(0), c);
    }
    put(built.atlas.x[0], built.atlas.x.size() > 1 ? built.atlas.x[1] : Rat(0), 'x');
    std::string out;
    for (const auto& row : grid) out += row + "\n";
    return out;
}

} // namespace bk
