#include "tsg/char_table.hpp"

#include "tsg/errors.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace tsg {

namespace {

constexpr double kOrthoTol = 1e-9;
constexpr double kIntegralTol = 1e-6;

const char* const kZ2 = R"(2 2
1 1
triv 1 1
sign 1 -1
)";

const char* const kZ4 = R"(4 4
1 1 1 1
triv 1 1 1 1
chi1 1 i -1 -i
chi2 1 -1 1 -1
chi3 1 -i -1 i
)";

const char* const kS3 = R"(# classes: e, (12), (123)
6 3
1 3 2
triv 1 1 1
sign 1 -1 1
std 2 0 -1
)";

const char* const kS4 = R"(# classes: e, (12), (12)(34), (123), (1234)
24 5
1 6 3 8 6
triv 1 1 1 1 1
sign 1 -1 1 1 -1
two 2 0 2 -1 0
std 3 1 -1 0 -1
stdsign 3 -1 -1 0 1
)";

const char* const kD4 = R"(# classes: e, r^2, {r, r^3}, {s, sr^2}, {sr, sr^3}
8 5
1 1 2 2 2
triv 1 1 1 1 1
a2 1 1 1 -1 -1
b1 1 1 -1 1 -1
b2 1 1 -1 -1 1
e 2 -2 0 0 0
)";

CharacterTable z3_table()
{
    const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
    const std::complex<double> one(1.0, 0.0);
    std::vector<Irrep> irreps{
        {"triv", ClassFunction(std::vector<std::complex<double>>{one, one, one})},
        {"omega", ClassFunction(std::vector<std::complex<double>>{one, w, std::conj(w)})},
        {"omega2", ClassFunction(std::vector<std::complex<double>>{one, std::conj(w), w})},
    };
    return CharacterTable("Z3", 3, {1, 1, 1}, std::move(irreps));
}

Rational parse_rational(const std::string& text, std::size_t line)
{
    static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(text, pattern))
        throw ParseError(line, "malformed rational '" + text + "'");
    std::string body = text.front() == '+' ? text.substr(1) : text;
    Rational out;
    const auto slash = body.find('/');
    if (slash != std::string::npos && BigInt(body.substr(slash + 1)) == 0)
        throw ParseError(line, "zero denominator in '" + text + "'");
    out.set_str(body, 10);
    out.canonicalize();
    return out;
}

GaussianRational parse_value(const std::string& text, std::size_t line)
{
    if (text.empty())
        throw ParseError(line, "empty value");
    if (text.back() != 'i')
        return {parse_rational(text, line), 0};

    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    if (im_text.empty() || im_text == "+")
        im_text = "1";
    else if (im_text == "-")
        im_text = "-1";
    return {re_text.empty() ? Rational(0) : parse_rational(re_text, line), parse_rational(im_text, line)};
}

bool approx_equal(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

std::string GaussianRational::to_string() const
{
    if (sgn(im) == 0)
        return re.get_str();
    std::string out = sgn(re) == 0 ? "" : re.get_str();
    const std::string im_text = im.get_str();
    if (!out.empty() && sgn(im) > 0)
        out += "+";
    return out + im_text + "i";
}

ClassFunction::ClassFunction(std::vector<GaussianRational> exact)
{
    approx_.reserve(exact.size());
    for (const auto& v : exact)
        approx_.push_back(v.to_complex());
    exact_ = std::move(exact);
}

ClassFunction::ClassFunction(std::vector<std::complex<double>> approx) : approx_(std::move(approx)) {}

ClassFunction ClassFunction::constant(std::size_t classes, long value)
{
    return ClassFunction(std::vector<GaussianRational>(classes, GaussianRational{value, 0}));
}

ClassFunction ClassFunction::operator*(const ClassFunction& rhs) const
{
    if (rhs.size() != size())
        throw PreconditionError("class functions of different lengths");
    if (is_exact() && rhs.is_exact()) {
        std::vector<GaussianRational> out;
        for (std::size_t c = 0; c < size(); ++c)
            out.push_back((*exact_)[c] * (*rhs.exact_)[c]);
        return ClassFunction(std::move(out));
    }
    std::vector<std::complex<double>> out;
    for (std::size_t c = 0; c < size(); ++c)
        out.push_back(approx_[c] * rhs.approx_[c]);
    return ClassFunction(std::move(out));
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const
{
    if (rhs.size() != size())
        throw PreconditionError("class functions of different lengths");
    if (is_exact() && rhs.is_exact()) {
        std::vector<GaussianRational> out;
        for (std::size_t c = 0; c < size(); ++c)
            out.push_back((*exact_)[c] + (*rhs.exact_)[c]);
        return ClassFunction(std::move(out));
    }
    std::vector<std::complex<double>> out;
    for (std::size_t c = 0; c < size(); ++c)
        out.push_back(approx_[c] + rhs.approx_[c]);
    return ClassFunction(std::move(out));
}

CharacterTable::CharacterTable(std::string name, long order, std::vector<long> class_sizes, std::vector<Irrep> irreps)
    : name_(std::move(name)), order_(order), class_sizes_(std::move(class_sizes)), irreps_(std::move(irreps))
{
    if (order_ < 1)
        throw PreconditionError("group order must be positive");
    if (class_sizes_.empty() || class_sizes_.front() != 1)
        throw PreconditionError("the identity class (size 1) must come first");
    long total = 0;
    for (long s : class_sizes_) {
        if (s < 1)
            throw PreconditionError("class sizes must be positive");
        total += s;
    }
    if (total != order_)
        throw PreconditionError("class sizes sum to " + std::to_string(total) + ", not the group order " +
                                std::to_string(order_));
    if (irreps_.size() != class_sizes_.size())
        throw PreconditionError("a character table needs as many irreps as classes");
    double dim_squares = 0;
    for (const auto& irrep : irreps_) {
        if (irrep.character.size() != class_sizes_.size())
            throw PreconditionError("irrep '" + irrep.name + "' has the wrong number of values");
        const auto e = irrep.character.approx().front();
        dim_squares += std::norm(e);
    }
    if (std::abs(dim_squares - static_cast<double>(order_)) > kOrthoTol)
        throw PreconditionError("irrep dimensions squared do not sum to the group order");
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        for (std::size_t j = i; j < irreps_.size(); ++j) {
            const auto ip = inner_product(*this, irreps_[i].character, irreps_[j].character).approx;
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(ip - expected) > kOrthoTol)
                throw PreconditionError("irreps '" + irreps_[i].name + "' and '" + irreps_[j].name +
                                        "' violate row orthogonality");
        }
}

CharacterTable CharacterTable::parse(std::istream& in, std::string name)
{
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> numbers;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::istringstream tokens(raw);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty() || words.front().front() == '#')
            continue;
        lines.push_back(std::move(words));
        numbers.push_back(line_no);
    }
    if (lines.empty())
        throw ParseError(line_no + 1, "missing header line '<order> <classes>'");

    auto parse_count = [](const std::string& word, std::size_t line, const char* what) {
        static const std::regex digits("[0-9]+");
        if (!std::regex_match(word, digits) || word.size() > 12)
            throw ParseError(line, std::string("expected ") + what + ", got '" + word + "'");
        return std::stol(word);
    };

    if (lines[0].size() != 2)
        throw ParseError(numbers[0], "header must be '<order> <classes>'");
    const long order = parse_count(lines[0][0], numbers[0], "group order");
    const long classes = parse_count(lines[0][1], numbers[0], "class count");
    if (order < 1 || classes < 1)
        throw ParseError(numbers[0], "order and class count must be positive");
    if (lines.size() < 2)
        throw ParseError(line_no + 1, "missing class-size line");
    if (static_cast<long>(lines[1].size()) != classes)
        throw ParseError(numbers[1], "expected " + std::to_string(classes) + " class sizes");
    std::vector<long> sizes;
    for (const auto& w : lines[1])
        sizes.push_back(parse_count(w, numbers[1], "class size"));

    std::vector<Irrep> irreps;
    for (std::size_t r = 2; r < lines.size(); ++r) {
        const auto& words = lines[r];
        if (static_cast<long>(words.size()) != classes + 1)
            throw ParseError(numbers[r], "expected a name and " + std::to_string(classes) + " values");
        std::vector<GaussianRational> values;
        for (std::size_t c = 1; c < words.size(); ++c)
            values.push_back(parse_value(words[c], numbers[r]));
        irreps.push_back({words[0], ClassFunction(std::move(values))});
    }
    if (static_cast<long>(irreps.size()) != classes)
        throw ParseError(line_no + 1, "expected " + std::to_string(classes) + " irreps, found " +
                                          std::to_string(irreps.size()));
    try {
        return CharacterTable(std::move(name), order, std::move(sizes), std::move(irreps));
    } catch (const PreconditionError& e) {
        throw ParseError(numbers[1], e.what());
    }
}

CharacterTable CharacterTable::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open character table '" + path + "'");
    return parse(in, path);
}

CharacterTable CharacterTable::builtin(const std::string& name)
{
    const char* text = nullptr;
    if (name == "Z2")
        text = kZ2;
    else if (name == "Z3")
        return z3_table();
    else if (name == "Z4")
        text = kZ4;
    else if (name == "S3")
        text = kS3;
    else if (name == "S4")
        text = kS4;
    else if (name == "D4")
        text = kD4;
    else
        throw PreconditionError("unknown built-in table '" + name + "'");
    std::istringstream in(text);
    return parse(in, name);
}

std::vector<std::string> CharacterTable::builtin_names() { return {"D4", "S3", "S4", "Z2", "Z3", "Z4"}; }

std::size_t CharacterTable::index_of(const std::string& irrep) const
{
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i].name == irrep)
            return i;
    throw PreconditionError("no irrep named '" + irrep + "' in " + name_);
}

std::size_t CharacterTable::trivial_index() const
{
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        bool all_one = true;
        for (const auto& v : irreps_[i].character.approx())
            all_one = all_one && approx_equal(v, {1.0, 0.0}, kOrthoTol);
        if (all_one)
            return i;
    }
    throw PreconditionError("table " + name_ + " has no trivial character");
}

std::vector<long> CharacterTable::dimensions() const
{
    std::vector<long> out;
    for (const auto& irrep : irreps_)
        out.push_back(std::lround(irrep.character.approx().front().real()));
    return out;
}

ClassFunction CharacterTable::regular_character() const
{
    std::vector<GaussianRational> values(class_sizes_.size(), GaussianRational{0, 0});
    values.front() = {order_, 0};
    return ClassFunction(std::move(values));
}

std::string CharacterTable::to_text() const
{
    std::string out = std::to_string(order_) + " " + std::to_string(class_sizes_.size()) + "\n";
    for (std::size_t c = 0; c < class_sizes_.size(); ++c)
        out += (c ? " " : "") + std::to_string(class_sizes_[c]);
    out += "\n";
    for (const auto& irrep : irreps_) {
        if (!irrep.character.is_exact())
            throw PreconditionError("to_text: table " + name_ + " has inexact values");
        out += irrep.name;
        for (const auto& v : irrep.character.exact())
            out += " " + v.to_string();
        out += "\n";
    }
    return out;
}

InnerProduct inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g)
{
    if (f.size() != t.class_count() || g.size() != t.class_count())
        throw PreconditionError("class function length does not match the table");
    InnerProduct out;
    if (f.is_exact() && g.is_exact()) {
        GaussianRational acc{0, 0};
        for (std::size_t c = 0; c < t.class_count(); ++c)
            acc = acc + GaussianRational{t.class_sizes()[c], 0} * f.exact()[c] * g.exact()[c].conj();
        acc.re /= t.order();
        acc.im /= t.order();
        out.approx = acc.to_complex();
        out.exact = std::move(acc);
        return out;
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t c = 0; c < t.class_count(); ++c)
        acc += static_cast<double>(t.class_sizes()[c]) * f.approx()[c] * std::conj(g.approx()[c]);
    out.approx = acc / static_cast<double>(t.order());
    return out;
}

std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f)
{
    std::vector<long> out;
    for (const auto& irrep : t.irreps()) {
        const InnerProduct ip = inner_product(t, f, irrep.character);
        long mult = 0;
        if (ip.exact) {
            const auto& v = *ip.exact;
            if (sgn(v.im) != 0 || v.re.get_den() != 1)
                throw InvalidCharacter("multiplicity of " + irrep.name + " is " + v.to_string() + ", not an integer");
            if (!v.re.get_num().fits_slong_p())
                throw InvalidCharacter("multiplicity of " + irrep.name + " overflows");
            mult = v.re.get_num().get_si();
        } else {
            const double rounded = std::round(ip.approx.real());
            if (std::abs(ip.approx.real() - rounded) > kIntegralTol || std::abs(ip.approx.imag()) > kIntegralTol)
                throw InvalidCharacter("multiplicity of " + irrep.name + " is not integral");
            mult = std::lround(rounded);
        }
        if (mult < 0)
            throw InvalidCharacter("multiplicity of " + irrep.name + " is negative");
        out.push_back(mult);
    }
    return out;
}

ClassFunction tensor_power_char(const ClassFunction& f, unsigned d)
{
    ClassFunction out = f.is_exact() ? ClassFunction::constant(f.size(), 1)
                                     : ClassFunction(std::vector<std::complex<double>>(f.size(), {1.0, 0.0}));
    for (unsigned k = 0; k < d; ++k)
        out = out * f;
    return out;
}

bool is_faithful(const CharacterTable& t, const ClassFunction& f)
{
    if (f.size() != t.class_count())
        throw PreconditionError("class function length does not match the table");
    for (std::size_t c = 1; c < f.size(); ++c) {
        const bool same = f.is_exact() ? f.exact()[c] == f.exact()[0]
                                       : approx_equal(f.approx()[c], f.approx()[0], kOrthoTol);
        if (same)
            return false;
    }
    return true;
}

std::optional<unsigned> first_power_containing(const CharacterTable& t, const ClassFunction& f,
                                               std::size_t target, unsigned max_d)
{
    if (target >= t.irreps().size())
        throw PreconditionError("irrep index out of range");
    if (!is_faithful(t, f))
        throw PreconditionError("first_power_containing needs a faithful character");
    ClassFunction power = f;
    for (unsigned d = 1; d <= max_d; ++d) {
        if (decompose(t, power)[target] >= 1)
            return d;
        power = power * f;
    }
    return std::nullopt;
}

RegularCheck regular_tensor_check(const CharacterTable& t, const ClassFunction& f)
{
    RegularCheck out;
    const auto degree = f.approx().front();
    if (std::abs(degree.imag()) > kIntegralTol || std::abs(degree.real() - std::round(degree.real())) > kIntegralTol)
        throw InvalidCharacter("character degree is not an integer");
    out.degree = std::lround(degree.real());
    decompose(t, f); // f must itself be a character
    out.multiplicities = decompose(t, f * t.regular_character());
    out.trivial_summands = out.multiplicities[t.trivial_index()];
    const auto dims = t.dimensions();
    out.ok = out.trivial_summands == out.degree;
    for (std::size_t i = 0; i < dims.size(); ++i)
        out.ok = out.ok && out.multiplicities[i] == out.degree * dims[i];
    return out;
}

RegularPower min_power_containing_regular(const CharacterTable& t, const ClassFunction& f, unsigned cap)
{
    if (!is_faithful(t, f))
        throw PreconditionError("min_power_containing_regular needs a faithful character");
    const auto dims = t.dimensions();
    const ClassFunction one_plus = (f.is_exact() ? ClassFunction::constant(f.size(), 1)
                                                 : ClassFunction(std::vector<std::complex<double>>(f.size(), {1.0, 0.0}))) +
                                   f;
    auto contains_regular = [&](const ClassFunction& g) {
        const auto mults = decompose(t, g);
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (mults[i] < dims[i])
                return false;
        return true;
    };

    RegularPower out;
    ClassFunction power = one_plus;
    for (unsigned n = 1; n <= cap; ++n) {
        if (contains_regular(power)) {
            out.power = n;
            const ClassFunction next = power * one_plus;
            out.monotone_next = contains_regular(next) && contains_regular(next * one_plus);
            return out;
        }
        power = power * one_plus;
    }
    return out;
}

} // namespace tsg
