#include "plk/format.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace plk {

namespace {

// Print order within equal degree: at the first variable (in canonical
// variable order) where the exponents differ, the smaller exponent wins.
bool print_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    auto i = a.factors().begin();
    auto j = b.factors().begin();
    while (i != a.factors().end() || j != b.factors().end()) {
        if (i == a.factors().end()) return true;   // a lacks b's variable: exponent 0 < e
        if (j == b.factors().end()) return false;
        if (i->first < j->first) return false;     // a has the earlier variable: a's exp > 0
        if (j->first < i->first) return true;
        if (i->second != j->second) return i->second < j->second;
        ++i;
        ++j;
    }
    return false;
}

std::string monomial_body(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty()) s += "*";
        s += v.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string to_string(const Monomial& m) { return m.is_one() ? "1" : monomial_body(m); }

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return print_before(a.first, b.first); });

    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [m, c] = terms[k];
        Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += monomial_body(m);
        } else {
            out += mag.str() + "*" + monomial_body(m);
        }
    }
    return out;
}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected integer");
        return s_.substr(start, pos_ - start);
    }
    int small_integer() {
        try {
            return std::stoi(integer());
        } catch (const std::exception&) {
            fail("index out of range");
        }
        return 0;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + why);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

Variable scan_variable(Scanner& sc) {
    char head = sc.peek();
    if (head == 'p') {
        sc.expect('p');
        sc.expect('[');
        int i = sc.small_integer();
        sc.expect(',');
        int j = sc.small_integer();
        sc.expect(']');
        return Variable::pair(i, j);
    }
    if (head == 'x' || head == 'y') {
        sc.expect(head);
        sc.expect('[');
        int i = sc.small_integer();
        sc.expect(']');
        return head == 'x' ? Variable::aux_x(i) : Variable::aux_y(i);
    }
    sc.fail("expected variable");
}

// term := [coefficient ['*']] factor ('*' factor)* | coefficient
void scan_term(Scanner& sc, int sign, Polynomial& acc) {
    Rational coeff(sign);
    bool have_var = false;
    Monomial mono;

    char head = sc.peek();
    if (std::isdigit(static_cast<unsigned char>(head))) {
        std::string num = sc.integer();
        std::string den;
        if (sc.accept('/')) den = sc.integer();
        Rational c = den.empty() ? Rational(BigInt(num)) : Rational(BigInt(num), BigInt(den));
        coeff *= c;
        if (!sc.accept('*')) {
            acc.add_term(coeff, Monomial::one());
            return;
        }
    }
    while (true) {
        Variable v = scan_variable(sc);
        int e = 1;
        if (sc.accept('^')) e = sc.small_integer();
        if (e < 1) sc.fail("exponent must be positive");
        mono = mono.times(Monomial::of(v, e));
        have_var = true;
        if (!sc.accept('*')) break;
    }
    if (!have_var) sc.fail("empty term");
    acc.add_term(coeff, mono);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Scanner sc(text);
    Polynomial acc;
    if (sc.done()) sc.fail("empty input");
    if (sc.peek() == '0') {
        sc.expect('0');
        if (sc.done()) return acc;
        sc.fail("trailing input after 0");
    }
    int sign = 1;
    if (sc.accept('-')) sign = -1;
    else sc.accept('+');
    scan_term(sc, sign, acc);
    while (!sc.done()) {
        if (sc.accept('+')) sign = 1;
        else if (sc.accept('-')) sign = -1;
        else sc.fail("expected '+' or '-'");
        scan_term(sc, sign, acc);
    }
    return acc;
}

Variable parse_variable(const std::string& text) {
    Scanner sc(text);
    Variable v = scan_variable(sc);
    if (!sc.done()) sc.fail("trailing input after variable");
    return v;
}

namespace {

std::string variable_list(const std::vector<Variable>& vs) {
    std::string s = "[";
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k) s += ",";
        s += vs[k].str();
    }
    return s + "]";
}

std::vector<Variable> scan_variable_list(Scanner& sc) {
    std::vector<Variable> vs;
    sc.expect('[');
    if (!sc.accept(']')) {
        do {
            vs.push_back(scan_variable(sc));
        } while (sc.accept(','));
        sc.expect(']');
    }
    return vs;
}

}  // namespace

IdealFile read_ideal_file(std::istream& in) {
    std::string line;
    bool have_order = false;
    std::vector<Variable> vars, keep;
    std::string scheme;
    std::vector<Polynomial> gens;

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        if (!have_order) {
            std::istringstream hdr(line);
            std::string tag;
            hdr >> tag;
            if (tag != "order:")
                throw std::invalid_argument("ideal file: first line must be an order header");
            hdr >> scheme;
            if (scheme != "lex" && scheme != "revlex" && scheme != "elim")
                throw std::invalid_argument("ideal file: unknown order scheme '" + scheme + "'");
            std::string field;
            while (hdr >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("ideal file: malformed order field '" + field + "'");
                std::string key = field.substr(0, eq);
                std::string rest = field.substr(eq + 1);
                Scanner list(rest);
                if (key == "vars") vars = scan_variable_list(list);
                else if (key == "keep") keep = scan_variable_list(list);
                else throw std::invalid_argument("ideal file: unknown order field '" + key + "'");
            }
            if (vars.empty()) throw std::invalid_argument("ideal file: order needs vars=[...]");
            if (scheme == "elim" && keep.empty())
                throw std::invalid_argument("ideal file: elim order needs keep=[...]");
            have_order = true;
            continue;
        }
        gens.push_back(parse_polynomial(line));
    }
    if (!have_order) throw std::invalid_argument("ideal file: missing order header");

    if (scheme == "lex") return IdealFile{Ideal(gens, vars), MonomialOrder::lex(vars)};
    if (scheme == "revlex") return IdealFile{Ideal(gens, vars), MonomialOrder::revlex(vars)};

    std::set<Variable> kept(keep.begin(), keep.end());
    std::vector<Variable> elim_block, keep_block;
    for (const Variable& v : vars)
        (kept.count(v) ? keep_block : elim_block).push_back(v);
    if (keep_block.size() != kept.size())
        throw std::invalid_argument("ideal file: keep lists a variable missing from vars");
    for (std::size_t k = vars.size() - keep_block.size(); k < vars.size(); ++k)
        if (!kept.count(vars[k]))
            throw std::invalid_argument("ideal file: kept variables must form the trailing block");
    return IdealFile{Ideal(gens, vars), MonomialOrder::block_elim(elim_block, keep_block)};
}

void write_ideal_file(std::ostream& out, const Ideal& ideal, const MonomialOrder& order) {
    switch (order.scheme()) {
        case OrderScheme::Lex:
            out << "order: lex vars=" << variable_list(order.variables());
            break;
        case OrderScheme::RevLex:
            out << "order: revlex vars=" << variable_list(order.variables());
            break;
        case OrderScheme::BlockElimLex: {
            std::vector<Variable> keep(order.variables().begin() + order.eliminated().size(),
                                       order.variables().end());
            out << "order: elim keep=" << variable_list(keep)
                << " vars=" << variable_list(order.variables());
            break;
        }
    }
    out << "\n";
    for (const Polynomial& g : ideal.generators) out << to_string(g) << "\n";
}

}  // namespace plk
