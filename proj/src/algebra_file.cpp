#include "kvp/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace kvp {

namespace {

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(line_, pos + 1, message);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::size_t pos() const { return pos_; }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string_view word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::size_t natural() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        if (pos_ - start > 9) fail_at(start, "number too large");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        const std::string_view token = text_.substr(start, pos_ - start);
        try {
            return Rational::parse(token);
        } catch (const std::domain_error&) {
            fail_at(start, "zero denominator in '" + std::string(token) + "'");
        } catch (const std::invalid_argument&) {
            fail_at(start, "malformed rational '" + std::string(token) + "'");
        }
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

BilinearStructure parse_algebra(std::string_view text) {
    std::optional<BilinearStructure> mu;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        LineCursor cur(line, line_no);
        if (!cur.at_end()) {
            const std::size_t word_pos = cur.pos();
            const std::string_view keyword = cur.word();
            if (keyword == "dim") {
                if (mu) cur.fail_at(word_pos, "dim declared twice");
                cur.expect('=');
                cur.skip_ws();
                const std::size_t dim_pos = cur.pos();
                const std::size_t n = cur.natural();
                if (n == 0) cur.fail_at(dim_pos, "dim must be at least 1");
                mu.emplace(n);
            } else if (keyword == "mu") {
                if (!mu) cur.fail_at(word_pos, "entry before the dim declaration");
                const std::size_t n = mu->dim();
                const auto index = [&]() {
                    cur.skip_ws();
                    const std::size_t p = cur.pos();
                    const std::size_t v = cur.natural();
                    if (v < 1 || v > n)
                        cur.fail_at(p, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
                    return v - 1;
                };
                cur.expect('(');
                const std::size_t i = index();
                cur.expect(',');
                const std::size_t j = index();
                cur.expect(')');
                cur.expect('=');
                do {
                    cur.skip_ws();
                    const std::size_t term_pos = cur.pos();
                    const std::size_t k = index();
                    cur.expect(':');
                    const Rational value = cur.rational();
                    if (!seen.emplace(i, j, k).second)
                        cur.fail_at(term_pos, "duplicate entry for mu(" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ") component " + std::to_string(k + 1));
                    (*mu)(i, j, k) = value;
                } while (cur.accept(','));
            } else {
                cur.fail_at(word_pos, keyword.empty() ? "expected 'dim' or 'mu'"
                                                      : "unknown keyword '" + std::string(keyword) + "'");
            }
            if (!cur.at_end()) cur.fail("unexpected trailing text");
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    if (!mu) throw ParseError(1, 1, "missing dim declaration");
    return *std::move(mu);
}

BilinearStructure read_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

std::string print_algebra(const BilinearStructure& mu) {
    const std::size_t n = mu.dim();
    std::string s = "dim = " + std::to_string(n) + "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string terms;
            for (std::size_t k = 0; k < n; ++k) {
                if (mu(i, j, k).is_zero()) continue;
                if (!terms.empty()) terms += ", ";
                terms += std::to_string(k + 1) + ":" + mu(i, j, k).to_string();
            }
            if (!terms.empty())
                s += "mu(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + terms + "\n";
        }
    return s;
}

} // namespace kvp
