#include "szeta/io.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace szeta {

std::string fmt_float(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

namespace {

std::string word_to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string reduced_to_string(const std::vector<int>& rw) {
    std::string s;
    for (size_t i = 0; i < rw.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(rw[i]);
    }
    return s;
}

} // namespace

void write_orbits_csv(std::ostream& os, const Group& group,
                      const std::vector<PrimeClassDatum>& classes) {
    os << "class_id,n_w,m_w,g_conj_class,length_L,reduced_word,word\n";
    int id = 0;
    for (const auto& c : classes) {
        os << id++ << ',' << c.n_w << ',' << c.m_w << ','
           << group.cycle_notation(group.class_representative(group.conjugacy_class_of(c.canonical.g)))
           << ',' << fmt_float(c.length_L) << ','
           << (c.reduced_word ? reduced_to_string(*c.reduced_word) : std::string()) << ','
           << word_to_string(c.canonical.word) << '\n';
    }
}

void write_orbits_json(std::ostream& os, const Group& group,
                       const std::vector<PrimeClassDatum>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    int id = 0;
    for (const auto& c : classes) {
        nlohmann::json row;
        row["class_id"] = id++;
        row["n_w"] = c.n_w;
        row["m_w"] = c.m_w;
        row["g_conj_class"] = group.cycle_notation(
            group.class_representative(group.conjugacy_class_of(c.canonical.g)));
        row["length_L"] = fmt_float(c.length_L);
        if (c.reduced_word) row["reduced_word"] = *c.reduced_word;
        row["word"] = c.canonical.word;
        arr.push_back(row);
    }
    os << arr.dump(2) << '\n';
}

void write_resonances_csv(std::ostream& os, const ResonanceSet& set) {
    os << "re,im,rep,order,residual,trust_mask\n";
    for (const auto& r : set.members)
        os << fmt_float(r.s.real()) << ',' << fmt_float(r.s.imag()) << ',' << r.rep << ','
           << r.order << ',' << fmt_float(r.residual) << ',' << (r.trusted ? 1 : 0) << '\n';
}

void write_resonances_json(std::ostream& os, const ResonanceSet& set) {
    nlohmann::json doc;
    doc["surface"] = set.surface;
    doc["order"] = set.order;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : set.members) {
        nlohmann::json row;
        row["re"] = r.s.real();
        row["im"] = r.s.imag();
        row["rep"] = r.rep;
        row["order"] = r.order;
        row["residual"] = r.residual;
        row["trusted"] = r.trusted;
        arr.push_back(row);
    }
    doc["resonances"] = arr;
    os << doc.dump(2) << '\n';
}

ResonanceSet read_resonances_csv(std::istream& is) {
    ResonanceSet set;
    std::string line;
    if (!std::getline(is, line) || line.rfind("re,im,rep", 0) != 0)
        throw Error("read_resonances_csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        Resonance r;
        std::getline(ls, field, ',');
        const double re = std::stod(field);
        std::getline(ls, field, ',');
        const double im = std::stod(field);
        r.s = Complex(re, im);
        std::getline(ls, r.rep, ',');
        std::getline(ls, field, ',');
        r.order = std::stoi(field);
        std::getline(ls, field, ',');
        r.residual = std::stod(field);
        std::getline(ls, field, ',');
        r.trusted = field == "1";
        set.members.push_back(r);
    }
    set.sort_by_im();
    return set;
}

void write_envelope_csv(std::ostream& os, const std::vector<EnvelopeSample>& samples,
                        const std::string& rep) {
    os << "t,h,rep\n";
    for (const auto& s : samples) {
        os << fmt_float(s.t) << ',';
        if (s.h)
            os << fmt_float(*s.h);
        else
            os << "empty";
        os << ',' << rep << '\n';
    }
}

namespace {

std::string rep_color(const std::string& rep) {
    static const std::map<std::string, std::string> colors = {
        {"I_1", "#00008b"},  {"I_2", "#4f94cd"},  {"II_1", "#cc0000"}, {"II_2", "#ff8c00"},
        {"III_1", "#006400"}, {"III_2", "#66cd00"}, {"IV_1", "#8b008b"}, {"IV_2", "#da70d6"},
        {"V_1", "#006400"},  {"V_2", "#66cd00"},  {"A", "#00008b"},    {"B", "#4f94cd"},
        {"C", "#cc0000"},    {"D", "#ff8c00"},    {"triv", "#00008b"}, {"all", "#444444"}};
    const auto it = colors.find(rep);
    return it == colors.end() ? "#000000" : it->second;
}

} // namespace

void write_resonances_svg(std::ostream& os, const ResonanceSet& set) {
    const int W = 900, H = 600, margin = 50;
    double re_lo = 1e300, re_hi = -1e300, im_lo = 1e300, im_hi = -1e300;
    for (const auto& r : set.members) {
        re_lo = std::min(re_lo, r.s.real());
        re_hi = std::max(re_hi, r.s.real());
        im_lo = std::min(im_lo, r.s.imag());
        im_hi = std::max(im_hi, r.s.imag());
    }
    if (set.members.empty()) {
        re_lo = 0;
        re_hi = 1;
        im_lo = 0;
        im_hi = 1;
    }
    const double re_span = std::max(re_hi - re_lo, 1e-9);
    const double im_span = std::max(im_hi - im_lo, 1e-9);
    auto px = [&](double re) { return margin + (re - re_lo) / re_span * (W - 2 * margin); };
    auto py = [&](double im) { return H - margin - (im - im_lo) / im_span * (H - 2 * margin); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">Re(s)</text>\n";
    os << "<text x=\"14\" y=\"" << H / 2 << "\" transform=\"rotate(-90 14 " << H / 2
       << ")\" text-anchor=\"middle\">Im(s)</text>\n";
    for (const auto& r : set.members)
        os << "<circle cx=\"" << std::setprecision(8) << px(r.s.real()) << "\" cy=\"" << py(r.s.imag())
           << "\" r=\"2\" fill=\"" << rep_color(r.rep) << "\"/>\n";
    os << "</svg>\n";
}

void print_character_table(std::ostream& os, const Group& group) {
    const int n_classes = group.n_classes();
    std::vector<std::string> headers;
    for (int c = 0; c < n_classes; ++c)
        headers.push_back(group.cycle_notation(group.class_representative(c)));
    size_t label_w = 6;
    for (const auto& irr : group.irreps()) label_w = std::max(label_w, irr.label.size() + 1);
    std::vector<size_t> widths;
    for (const auto& h : headers) widths.push_back(std::max<size_t>(h.size(), 4) + 1);
    os << std::left << std::setw(static_cast<int>(label_w)) << "";
    for (int c = 0; c < n_classes; ++c)
        os << std::setw(static_cast<int>(widths[c])) << headers[c];
    os << '\n';
    for (const auto& irr : group.irreps()) {
        os << std::left << std::setw(static_cast<int>(label_w)) << irr.label;
        for (int c = 0; c < n_classes; ++c) {
            const double v = group.character_value(irr, group.class_representative(c));
            std::ostringstream cell;
            if (std::abs(v - std::round(v)) < 1e-12)
                cell << static_cast<long long>(std::llround(v));
            else
                cell << std::setprecision(6) << v;
            os << std::setw(static_cast<int>(widths[c])) << cell.str();
        }
        os << '\n';
    }
}

void write_character_table_csv(std::ostream& os, const Group& group) {
    os << "irrep";
    for (int c = 0; c < group.n_classes(); ++c)
        os << ',' << '"' << group.cycle_notation(group.class_representative(c)) << '"';
    os << '\n';
    for (const auto& irr : group.irreps()) {
        os << irr.label;
        for (int c = 0; c < group.n_classes(); ++c) {
            const double v = group.character_value(irr, group.class_representative(c));
            if (std::abs(v - std::round(v)) < 1e-12)
                os << ',' << static_cast<long long>(std::llround(v));
            else
                os << ',' << fmt_float(v);
        }
        os << '\n';
    }
}

} // namespace szeta
