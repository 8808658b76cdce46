#include "mpdc/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace mpdc {

EmitFormat emit_format_from_string(const std::string& s) {
    if (s == "csv") return EmitFormat::Csv;
    if (s == "json") return EmitFormat::Json;
    if (s == "svg") return EmitFormat::Svg;
    throw ConfigError("unknown format '" + s + "' (expected csv, json or svg)");
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit_csv(const ScanResult& scan, std::ostream& out) {
    scan.validate();
    for (std::size_t c = 0; c < scan.columns.size(); ++c)
        out << (c ? "," : "") << scan.columns[c].name;
    out << '\n';
    for (std::size_t r = 0; r < scan.rows(); ++r) {
        for (std::size_t c = 0; c < scan.columns.size(); ++c)
            out << (c ? "," : "") << format_double(scan.columns[c].values[r]);
        out << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_strict_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw IoError("malformed numeric field '" + s + "'");
    return v;
}

} // namespace

ScanResult parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV input");
    ScanResult scan;
    for (auto& name : split_csv_line(line))
        scan.columns.push_back({std::move(name), {}});
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != scan.columns.size())
            throw IoError("CSV row width does not match the header");
        for (std::size_t c = 0; c < fields.size(); ++c)
            scan.columns[c].values.push_back(parse_strict_double(fields[c]));
    }
    return scan;
}

void emit_json(const ScanResult& scan, std::ostream& out) {
    scan.validate();
    nlohmann::ordered_json j;
    j["label"] = scan.label;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : scan.metadata) meta[k] = v;
    j["metadata"] = meta;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : scan.columns)
        j["columns"].push_back({{"name", c.name}, {"values", c.values}});
    out << j.dump(2) << '\n';
}

namespace {

std::string fixed2(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

// Largest of 1, 2, 5 times a power of ten not above the raw step.
double nice_step(double raw) {
    if (!(raw > 0.0)) return 1.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {5.0, 2.0, 1.0})
        if (mult * mag <= raw) return mult * mag;
    return mag;
}

struct Ticks {
    std::vector<double> at;
};

Ticks make_ticks(double lo, double hi) {
    Ticks t;
    if (!(hi > lo)) {
        t.at = {lo};
        return t;
    }
    const double step = nice_step((hi - lo) / 11.0);
    double first = std::ceil(lo / step) * step;
    for (double v = first; v <= hi + step * 1e-9; v += step) {
        t.at.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
        if (t.at.size() >= 12) break;
    }
    return t;
}

const char* kPalette[] = {"#1b6ca8", "#c4432b", "#2d8a4e", "#8a5bb8", "#b88a2d", "#4e8a8a"};

} // namespace

void emit_svg(const ScanResult& scan, std::ostream& out) {
    scan.validate();
    const double width = 800.0, height = 600.0;
    const double ml = 80.0, mr = 30.0, mt = 50.0, mb = 60.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const auto& xs = scan.columns.front().values;
    double xmin = xs.front(), xmax = xs.back();
    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (std::size_t c = 1; c < scan.columns.size(); ++c)
        for (double v : scan.columns[c].values) {
            if (first || v < ymin) ymin = v;
            if (first || v > ymax) ymax = v;
            first = false;
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    const auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" << scan.label << "</text>\n";

    const Ticks tx = make_ticks(xmin, xmax);
    const Ticks ty = make_ticks(ymin, ymax);
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (double v : tx.at) {
        const std::string x = fixed2(px(v));
        out << "<line x1=\"" << x << "\" y1=\"" << fixed2(mt + ph) << "\" x2=\"" << x
            << "\" y2=\"" << fixed2(mt + ph + 5.0) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << fixed2(mt + ph + 20.0)
            << "\" text-anchor=\"middle\">" << format_double(v) << "</text>\n";
    }
    for (double v : ty.at) {
        const std::string y = fixed2(py(v));
        out << "<line x1=\"" << fixed2(ml - 5.0) << "\" y1=\"" << y << "\" x2=\"" << fixed2(ml)
            << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fixed2(ml - 8.0) << "\" y=\"" << fixed2(py(v) + 4.0)
            << "\" text-anchor=\"end\">" << format_double(v) << "</text>\n";
    }
    out << "</g>\n";
    out << "<rect x=\"" << fixed2(ml) << "\" y=\"" << fixed2(mt) << "\" width=\"" << fixed2(pw)
        << "\" height=\"" << fixed2(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed2(ml + pw / 2.0) << "\" y=\"" << fixed2(height - 15.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << scan.columns.front().name << "</text>\n";

    for (std::size_t c = 1; c < scan.columns.size(); ++c) {
        const char* color = kPalette[(c - 1) % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t r = 0; r < scan.rows(); ++r) {
            if (r) out << ' ';
            out << fixed2(px(xs[r])) << ',' << fixed2(py(scan.columns[c].values[r]));
        }
        out << "\"/>\n";
        const double ly = mt + 18.0 * static_cast<double>(c);
        out << "<line x1=\"" << fixed2(ml + pw - 150.0) << "\" y1=\"" << fixed2(ly)
            << "\" x2=\"" << fixed2(ml + pw - 120.0) << "\" y2=\"" << fixed2(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << fixed2(ml + pw - 112.0) << "\" y=\"" << fixed2(ly + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << scan.columns[c].name
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_scan(const ScanResult& scan, const std::string& path, EmitFormat format) {
    if (scan.columns.empty() || scan.rows() == 0) {
        throw IoError("refusing to write an empty scan to '" + path + "'");
    }
    const auto emit = [&](std::ostream& out) {
        switch (format) {
            case EmitFormat::Csv: emit_csv(scan, out); break;
            case EmitFormat::Json: emit_json(scan, out); break;
            case EmitFormat::Svg: emit_svg(scan, out); break;
        }
        if (!out) throw IoError("failed while writing '" + path + "'");
    };
    if (path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    emit(f);
}

} // namespace mpdc
