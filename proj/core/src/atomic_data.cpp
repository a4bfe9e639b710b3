#include "magic/atomic_data.hpp"

#include "magic/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace magic {

namespace {

struct Seed {
    const char* species;
    int twoI;
    int twoF;
    const char* zeta_plus;
    const char* zeta_minus;
    const char* b_over_a;
    const char* source;
};

// Every built-in row is an nS1/2 -> nP3/2 line.
constexpr Seed seeds[] = {
    {"6Li", 2, 3, "2.9", "-1.8", "0.087", "Allegrini22"},
    {"7Li", 3, 2, "6.0", "-2.9", "0.052", "Shimizu87"},
    {"7Li", 3, 4, "9.4", "-6.0", "0.052", "Shimizu87"},
    {"23Na", 3, 2, "-34.3", "15.8", "0.147", "Yei93"},
    {"23Na", 3, 4, "-58.3", "34.3", "0.147", "Yei93"},
    {"40K", 8, 7, "33.3", "-24.2", "0.45", "Falke06"},
    {"40K", 8, 9, "44.1", "-33.3", "0.45", "Falke06"},
    {"85Rb", 5, 4, "-63.4", "29.4", "1.03", "Das08"},
    {"85Rb", 5, 6, "-120.6", "63.4", "1.03", "Das08"},
    {"87Rb", 3, 2, "-156.9", "72.2", "0.148", "Ye96"},
    {"87Rb", 3, 4, "-266.7", "156.9", "0.148", "Ye96"},
    {"133Cs", 7, 6, "-201.29", "151.22", "-0.00981", "Gerginov03"},
    {"133Cs", 7, 8, "-251.09", "201.29", "-0.00981", "Gerginov03"},
    {"43Ca+", 7, 6, "122.0", "-88.1", "0.223", "Nortershauser98"},
    {"43Ca+", 7, 8, "159.9", "-122.0", "0.223", "Nortershauser98"},
    {"85Sr+", 9, 8, "275.0", "-315.9", "-4.08", "Buchinger90"},
    {"85Sr+", 9, 10, "154.1", "-275.0", "-4.08", "Buchinger90"},
    {"87Sr+", 9, 8, "198.4", "-203.0", "-2.46", "Buchinger90"},
    {"87Sr+", 9, 10, "157.0", "-198.4", "-2.46", "Buchinger90"},
    {"89Sr+", 5, 4, "171.9", "-77.9", "1.07", "Buchinger90"},
    {"89Sr+", 5, 6, "331.9", "-171.9", "1.07", "Buchinger90"},
    {"91Sr+", 5, 4, "163.3", "-115.0", "-0.234", "Buchinger90"},
    {"91Sr+", 5, 6, "200.6", "-163.3", "-0.234", "Buchinger90"},
    {"135Ba+", 3, 2, "-167.0", "54.0", "0.522", "Villemoes93"},
    {"135Ba+", 3, 4, "-398.0", "167.0", "0.522", "Villemoes93"},
    {"137Ba+", 3, 2, "-161.9", "34.7", "0.727", "Villemoes93"},
    {"137Ba+", 3, 4, "-474.1", "161.9", "0.727", "Villemoes93"},
    {"221Ra+", 5, 4, "681.1", "-1136.2", "-60.9", "Neu88"},
    {"221Ra+", 5, 6, "-1001.8", "-681.1", "-60.9", "Neu88"},
    {"223Ra+", 3, 2, "751.8", "-808.3", "15.3", "Neu88"},
    {"223Ra+", 3, 4, "-1034.3", "-751.8", "15.3", "Neu88"},
};

const char* const header = "magicdetune-atoms v1";

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& v, int line, const std::string& key) {
    try {
        size_t used = 0;
        int x = std::stoi(v, &used);
        if (used == v.size()) return x;
    } catch (const std::logic_error&) {
    }
    throw ParseError(line, key + " is not an integer: '" + v + "'");
}

}  // namespace

bool AtomRecord::has_line(int offset) const {
    HalfInt Fp = F + HalfInt(offset);
    if (Fp.twice() < 0) return false;
    return triangle(Fp, Jp, I) && triangle(F, HalfInt(1), Fp);
}

int AtomRecord::line_count() const {
    return has_line(-1) + has_line(0) + has_line(1);
}

bool AtomRecord::magic_capable() const {
    return I.twice() >= 2 && three_line();
}

void AtomRecord::validate() const {
    if (species.empty()) throw RecordError("species", "empty");
    if (I.twice() < 0) throw RecordError("twoI", "negative");
    if (J.twice() <= 0) throw RecordError("twoJ", "must be positive");
    if (Jp.twice() <= 0) throw RecordError("twoJp", "must be positive");
    if (!triangle(J, Jp, HalfInt(1)))
        throw RecordError("twoJp", "J=" + J.str() + " -> J'=" + Jp.str() + " is not a dipole line");
    if (F.twice() < 0 || !triangle(I, J, F))
        throw RecordError("twoF", "F=" + F.str() + " outside |I-J|..I+J for I=" + I.str() +
                                      ", J=" + J.str());
    if (line_count() == 0) throw RecordError("twoF", "no excited manifold is dipole-coupled");
    if (three_line() && zeta_plus == zeta_minus)
        throw RecordError("zeta_minus_MHz", "equal to zeta_plus_MHz");
}

const std::vector<AtomRecord>& builtin_registry() {
    static const std::vector<AtomRecord> rows = [] {
        std::vector<AtomRecord> out;
        for (const Seed& s : seeds) {
            AtomRecord r;
            r.species = s.species;
            r.I = half(s.twoI);
            r.J = half(1);
            r.Jp = half(3);
            r.F = half(s.twoF);
            r.zeta_plus = parse_decimal(s.zeta_plus);
            r.zeta_minus = parse_decimal(s.zeta_minus);
            r.b_over_a = parse_decimal(s.b_over_a);
            r.source = s.source;
            out.push_back(std::move(r));
        }
        return out;
    }();
    return rows;
}

const AtomRecord* find_record(const std::vector<AtomRecord>& records, const std::string& species,
                              HalfInt F) {
    for (const auto& r : records)
        if (r.species == species && r.F == F) return &r;
    return nullptr;
}

const std::vector<SpinNote>& nuclear_spin_notes() {
    static const std::vector<SpinNote> notes = {
        {"133Ba+", half(1), "nuclear spin I=1/2: scattering reaches at most two excited manifolds"},
    };
    return notes;
}

std::vector<AtomRecord> load_atom_table(std::istream& in) {
    std::vector<AtomRecord> out;
    std::string raw;
    int line_no = 0;

    if (!std::getline(in, raw)) throw ParseError(1, "empty input");
    ++line_no;
    if (trim(raw) != header) throw ParseError(1, std::string("expected header '") + header + "'");

    std::map<std::string, std::pair<std::string, int>> fields;
    int record_line = 0;

    auto flush = [&] {
        if (fields.empty()) return;
        static const char* required[] = {"species", "twoI", "twoJ", "twoJp", "twoF",
                                         "zeta_plus_MHz", "zeta_minus_MHz"};
        for (const char* k : required)
            if (!fields.count(k)) throw ParseError(record_line, std::string("missing key ") + k);

        auto get = [&](const char* k) { return fields.at(k); };
        AtomRecord r;
        r.species = get("species").first;
        r.I = half(parse_int(get("twoI").first, get("twoI").second, "twoI"));
        r.J = half(parse_int(get("twoJ").first, get("twoJ").second, "twoJ"));
        r.Jp = half(parse_int(get("twoJp").first, get("twoJp").second, "twoJp"));
        r.F = half(parse_int(get("twoF").first, get("twoF").second, "twoF"));
        for (auto [key, dst] : {std::pair{"zeta_plus_MHz", &r.zeta_plus},
                                std::pair{"zeta_minus_MHz", &r.zeta_minus},
                                std::pair{"b_over_a", &r.b_over_a}}) {
            auto it = fields.find(key);
            if (it == fields.end()) continue;
            try {
                *dst = parse_decimal(it->second.first);
            } catch (const std::invalid_argument& e) {
                throw ParseError(it->second.second, std::string(key) + ": " + e.what());
            }
        }
        if (auto it = fields.find("source"); it != fields.end()) r.source = it->second.first;

        r.validate();
        if (find_record(out, r.species, r.F))
            throw RecordError("species", "duplicate record " + r.species + " F=" + r.F.str());
        out.push_back(std::move(r));
        fields.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string text = raw;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        bool blank_raw = trim(raw).empty();
        text = trim(text);
        if (text.empty()) {
            // only a truly blank line ends a record; comment lines do not
            if (blank_raw) flush();
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        static const char* known[] = {"species",       "twoI",           "twoJ",     "twoJp", "twoF",
                                      "zeta_plus_MHz", "zeta_minus_MHz", "b_over_a", "source"};
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known))
            throw ParseError(line_no, "unknown key '" + key + "'");
        if (fields.count(key)) throw ParseError(line_no, "repeated key '" + key + "'");
        if (fields.empty()) record_line = line_no;
        fields[key] = {value, line_no};
    }
    flush();
    return out;
}

void write_atom_table(std::ostream& out, const std::vector<AtomRecord>& records) {
    out << header << "\n";
    for (const auto& r : records) {
        out << "\n";
        out << "species = " << r.species << "\n";
        out << "twoI = " << r.I.twice() << "\n";
        out << "twoJ = " << r.J.twice() << "\n";
        out << "twoJp = " << r.Jp.twice() << "\n";
        out << "twoF = " << r.F.twice() << "\n";
        out << "zeta_plus_MHz = " << format_decimal(r.zeta_plus) << "\n";
        out << "zeta_minus_MHz = " << format_decimal(r.zeta_minus) << "\n";
        out << "b_over_a = " << format_decimal(r.b_over_a) << "\n";
        if (!r.source.empty()) out << "source = " << r.source << "\n";
    }
}

std::pair<Rational, Rational> zeta_from_dipole_constant(const HyperfineConstants& c, HalfInt F) {
    if (c.a_hfs == 0) throw std::invalid_argument("a_hfs must be nonzero");
    Rational f = F.rational();
    return {-c.a_hfs * (f + 1), c.a_hfs * f};
}

Rational parse_decimal(const std::string& text) {
    std::string s = trim(text);
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';

    BigInt digits = 0;
    int frac = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch >= '0' && ch <= '9') {
            digits = digits * 10 + (ch - '0');
            seen_digit = true;
            if (seen_point) ++frac;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    int exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        try {
            size_t used = 0;
            exponent = std::stoi(s.substr(i + 1), &used);
            i += 1 + used;
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad exponent in '" + text + "'");
        }
    }
    if (!seen_digit || i != s.size()) throw std::invalid_argument("not a decimal number: '" + text + "'");

    int shift = exponent - frac;
    BigInt scale = boost::multiprecision::pow(BigInt(10), std::abs(shift));
    Rational v = shift >= 0 ? Rational(digits * scale) : Rational(digits, scale);
    return neg ? Rational(-v) : v;
}

std::string format_decimal(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    int twos = 0, fives = 0;
    BigInt d = den;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
        std::ostringstream os;
        os.precision(17);
        os << value.convert_to<double>();
        return os.str();
    }
    int places = std::max(twos, fives);
    BigInt scaled = num * boost::multiprecision::pow(BigInt(10), places) / den;
    bool neg = scaled < 0;
    std::string digits = (neg ? BigInt(-scaled) : scaled).str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places)
            digits.insert(0, places - digits.size() + 1, '0');
        digits.insert(digits.size() - places, ".");
    }
    return neg ? "-" + digits : digits;
}

const std::vector<PublishedRow>& published_rows() {
    using std::nullopt;
    static const std::vector<PublishedRow> rows = [] {
        std::vector<PublishedRow> r = {
            {"6Li", half(3), false, 0.58, 2.38, 2.41, 2.32, 2.39, 6.7e-4, 0.1},
            {"7Li", half(2), false, 1.45, -15.0, -15.5, -15.0, -15.0, 3.0e-5, 0.1},
            {"7Li", half(4), false, 1.55, 9.11, 8.92, 9.40, 9.05, 9.4e-4, 0.1},
            {"23Na", half(2), false, -8.0, 85.1, 93.8, 85.8, 85.5, 1.7e-4, 0.1},
            {"23Na", half(4), false, -9.4, -53.4, -50.3, -58.3, -52.4, 7.9e-3, 0.1},
            {"40K", half(7), false, 3.5, -73.0, -77.8, -74.0, -73.4, 5.7e-4, 0.1},
            {"40K", half(9), false, 3.9, 60.6, 57.6, 64.1, 60.1, 3.0e-3, 0.1},
            {"85Rb", half(4), false, -7.7, 140.6, 227.6, 147.9, 143.9, 7.2e-3, 0.1},
            {"85Rb", half(6), false, -13.4, -118.9, -97.3, -150.8, -113.9, 6.0e-2, 0.1},
            {"87Rb", half(2), false, -36.4, 389.4, 429.4, 392.2, 391.2, 1.8e-4, 0.1},
            {"87Rb", half(4), false, -42.8, -244.3, -229.9, -266.7, -239.5, 8.0e-3, 0.1},
            {"133Cs", half(6), false, -25.20, 453.04, 452.36, 452.90, 452.99, 3.0e-7, 0.01},
            {"133Cs", half(8), false, -25.12, -352.05, -352.50, -351.53, -352.13, 1.9e-6, 0.01},
            {"43Ca+", half(6), true, 14.8, -272.6, -282.3, -274.5, -273.3, 1.5e-4, 0.1},
            {"43Ca+", half(8), true, 15.8, 216.4, 210.3, 223.9, 215.4, 1.0e-3, 0.1},
            {"85Sr+", half(8), true, 36.3, -657.8, -503.2, -605.0, -642.2, 0.023, 0.1},
            {"85Sr+", half(10), true, 15.0, 423.5, 846.3, 213.2, 450.2, 0.199, 0.1},
            {"87Sr+", half(8), true, 24.0, -461.0, -381.1, -436.5, -453.4, 0.010, 0.1},
            {"87Sr+", half(10), true, 14.4, 323.8, 439.7, 235.5, 336.1, 0.069, 0.1},
            {"89Sr+", half(4), true, 20.5, -380.2, -643.7, -401.1, -389.7, 8.0e-3, 0.1},
            {"89Sr+", half(6), true, 36.6, 324.4, 263.2, 414.9, 310.2, 0.065, 0.1},
            {"91Sr+", half(4), true, 28.5, -384.5, -365.4, -381.0, -383.0, 2.1e-4, 0.1},
            {"91Sr+", half(6), true, 27.5, 273.2, 271.2, 275.8, 272.8, 7.4e-5, 0.1},
            {"135Ba+", half(2), true, -27.9, 403.7, 920.2, 417.5, 413.0, 3.8e-3, 0.1},
            {"135Ba+", half(4), true, -56.3, -294.9, -233.2, -398.0, -272.6, 0.118, 0.1},
            {"137Ba+", half(2), true, -18.4, 382.6, -1216.0, 404.8, 398.4, 0.011, 0.1},
            {"137Ba+", half(4), true, -60.9, -314.9, -221.3, -474.1, -283.9, 0.251, 0.1},
            {"221Ra+", half(4), true, 231.9, -1946.4, -1073.6, -1589.2, -1833.0, 0.084, 0.1},
            {"221Ra+", half(6), true, -227.8, 623.9, 734.9, -1252.3, nullopt, nullopt, 0.1},
            {"223Ra+", half(2), true, 368.7, -2060.2, -1224.5, -1879.5, -1965.4, 0.025, 0.1},
            {"223Ra+", half(4), true, -270.0, 720.6, 795.2, -1034.3, nullopt, nullopt, 0.1},
        };
        return r;
    }();
    return rows;
}

const PublishedRow* find_published(const std::string& species, HalfInt F) {
    for (const auto& p : published_rows())
        if (p.species == species && p.F == F) return &p;
    return nullptr;
}

}  // namespace magic
