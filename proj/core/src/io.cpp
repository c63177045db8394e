#include "stabkit/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace stabkit {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    // Everything from '#' on is a comment.
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t parse_uint(const Token& tok, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.begin(), tok.text.end(), value);
    if (ec != std::errc{} || ptr != tok.text.end()) {
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok.text) + "'",
                         line_no, tok.column);
    }
    return value;
}

}  // namespace

StabilizerCode parse_code(std::string_view text, Backend backend) {
    std::optional<Prime> p;
    std::optional<std::size_t> n;
    std::vector<PauliVector> generators;
    std::vector<std::size_t> generator_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        const Token& head = toks[0];

        if (head.text == "p") {
            if (p) throw ParseError("duplicate p line", line_no, head.column);
            if (n || !generators.empty()) {
                throw ParseError("p must come first", line_no, head.column);
            }
            if (toks.size() != 2) throw ParseError("p takes one value", line_no, head.column);
            const std::uint64_t value = parse_uint(toks[1], line_no, "a prime");
            try {
                p.emplace(static_cast<std::uint32_t>(value));
            } catch (const Error&) {
                throw ParseError(std::to_string(value) + " is not prime", line_no, toks[1].column);
            }
        } else if (head.text == "n") {
            if (!p) throw ParseError("n before p", line_no, head.column);
            if (n) throw ParseError("duplicate n line", line_no, head.column);
            if (toks.size() != 2) throw ParseError("n takes one value", line_no, head.column);
            const std::uint64_t value = parse_uint(toks[1], line_no, "a qudit count");
            if (value == 0) throw ParseError("n must be positive", line_no, toks[1].column);
            n = static_cast<std::size_t>(value);
        } else if (head.text == "g") {
            if (!p || !n) throw ParseError("generator before the p/n header", line_no, head.column);
            if (toks.size() != 1 + 2 * *n) {
                throw WrongLengthError("g line needs " + std::to_string(2 * *n) + " entries, got " +
                                           std::to_string(toks.size() - 1),
                                       line_no, head.column);
            }
            std::vector<std::uint32_t> flat;
            flat.reserve(2 * *n);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const std::uint64_t value = parse_uint(toks[i], line_no, "a field element");
                if (value >= p->value()) {
                    throw ParseError("entry " + std::to_string(value) + " outside [0, " +
                                         std::to_string(p->value()) + ")",
                                     line_no, toks[i].column);
                }
                flat.push_back(static_cast<std::uint32_t>(value));
            }
            generators.push_back(PauliVector::from_flat(*p, flat));
            generator_lines.push_back(line_no);
        } else if (head.text == "P") {
            if (!p || !n) throw ParseError("generator before the p/n header", line_no, head.column);
            if (p->value() != 2) {
                throw LetterRequiresP2Error("Pauli letters are only valid for p = 2",
                                            line_no, head.column);
            }
            if (toks.size() != 2) throw ParseError("P takes one Pauli string", line_no, head.column);
            const Token& word = toks[1];
            if (word.text.size() != *n) {
                throw WrongLengthError("Pauli string needs " + std::to_string(*n) +
                                           " letters, got " + std::to_string(word.text.size()),
                                       line_no, word.column);
            }
            for (std::size_t i = 0; i < word.text.size(); ++i) {
                const char c = word.text[i];
                if (c != 'I' && c != 'X' && c != 'Z' && c != 'Y') {
                    throw ParseError(std::string("invalid Pauli letter '") + c + "'", line_no,
                                     word.column + i);
                }
            }
            generators.push_back(PauliVector::from_pauli_string(word.text));
            generator_lines.push_back(line_no);
        } else {
            throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no,
                             head.column);
        }
    }

    if (!p) throw ParseError("missing p line", line_no + 1, 1);
    if (!n) throw ParseError("missing n line", line_no + 1, 1);

    try {
        return StabilizerCode::make(*p, *n, generators, backend);
    } catch (const NotIsotropicError& e) {
        const std::size_t la = generator_lines[e.first()];
        const std::size_t lb = generator_lines[e.second()];
        throw NotIsotropicError("generators at lines " + std::to_string(la) + " and " +
                                    std::to_string(lb) + " do not commute",
                                la, lb);
    }
}

StabilizerCode parse_code(std::istream& in, Backend backend) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code(std::string_view(buf.view()), backend);
}

std::string serialize_code(const StabilizerCode& code) {
    std::string out;
    out += "p " + std::to_string(code.modulus().value()) + "\n";
    out += "n " + std::to_string(code.n()) + "\n";
    const Subspace& s = code.stabilizer();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        out += "g";
        for (std::uint32_t v : s.basis().row(r)) out += " " + std::to_string(v);
        out += "\n";
        if (code.modulus().value() == 2) {
            out += "# P " + PauliVector::from_flat(code.modulus(), s.basis().row(r)).pauli_string() +
                   "\n";
        }
    }
    return out;
}

QubitSet parse_qubit_set(std::string_view text, std::size_t n) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    const std::string_view whole = trim(text);
    if (whole == "empty") return QubitSet(n);
    if (whole.empty()) throw ParseError("empty qudit set spec (use the literal 'empty')", 1, 1);

    auto parse_index = [&](std::string_view item, std::size_t col) -> std::uint32_t {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(item.begin(), item.end(), value);
        if (ec != std::errc{} || ptr != item.end()) {
            throw ParseError("expected a qudit index, got '" + std::string(item) + "'", 1, col);
        }
        if (value == 0 || value > n) {
            throw IndexOutOfRangeError("qudit index " + std::to_string(value) + " outside [1, " +
                                       std::to_string(n) + "]");
        }
        return static_cast<std::uint32_t>(value - 1);
    };

    std::vector<std::uint32_t> members;
    std::size_t pos = 0;
    while (pos <= whole.size()) {
        std::size_t comma = whole.find(',', pos);
        if (comma == std::string_view::npos) comma = whole.size();
        const std::string_view item = trim(whole.substr(pos, comma - pos));
        const std::size_t col = pos + 1;
        if (item.empty()) throw ParseError("empty item in qudit set spec", 1, col);

        if (const std::size_t dash = item.find('-'); dash != std::string_view::npos) {
            const std::uint32_t lo = parse_index(item.substr(0, dash), col);
            const std::uint32_t hi = parse_index(item.substr(dash + 1), col);
            if (lo > hi) throw ParseError("descending range '" + std::string(item) + "'", 1, col);
            for (std::uint32_t i = lo; i <= hi; ++i) members.push_back(i);
        } else {
            members.push_back(parse_index(item, col));
        }
        pos = comma + 1;
    }
    return {n, std::move(members)};
}

std::string format_qubit_set(const QubitSet& s) {
    if (s.empty()) return "empty";
    std::string out;
    for (std::uint32_t i : s.members()) {
        if (!out.empty()) out += ",";
        out += std::to_string(i + 1);
    }
    return out;
}

PauliVector parse_pauli_vector(std::string_view text, Prime p, std::size_t n) {
    const std::vector<Token> toks = tokenize(text);
    if (toks.empty()) throw ParseError("empty vector", 1, 1);

    const bool letters = toks.size() == 1 &&
                         toks[0].text.find_first_not_of("IXZY") == std::string_view::npos;
    if (letters) {
        if (p.value() != 2) {
            throw LetterRequiresP2Error("Pauli letters are only valid for p = 2", 1,
                                        toks[0].column);
        }
        if (toks[0].text.size() != n) {
            throw WrongLengthError("Pauli string needs " + std::to_string(n) + " letters, got " +
                                       std::to_string(toks[0].text.size()),
                                   1, toks[0].column);
        }
        return PauliVector::from_pauli_string(toks[0].text);
    }

    if (toks.size() != 2 * n) {
        throw WrongLengthError(
            "vector needs " + std::to_string(2 * n) + " entries, got " + std::to_string(toks.size()),
            1, toks[0].column);
    }
    std::vector<std::uint32_t> flat;
    flat.reserve(2 * n);
    for (const Token& tok : toks) {
        const std::uint64_t value = parse_uint(tok, 1, "a field element");
        if (value >= p.value()) {
            throw ParseError("entry " + std::to_string(value) + " outside [0, " +
                                 std::to_string(p.value()) + ")",
                             1, tok.column);
        }
        flat.push_back(static_cast<std::uint32_t>(value));
    }
    return PauliVector::from_flat(p, flat);
}

std::string format_flat_row(const PauliVector& v) {
    std::string out;
    for (std::uint32_t e : v.flat()) {
        if (!out.empty()) out += " ";
        out += std::to_string(e);
    }
    return out;
}

}  // namespace stabkit
