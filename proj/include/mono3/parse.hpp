#ifndef MONO3_PARSE_HPP
#define MONO3_PARSE_HPP

#include <cctype>
#include <string>

#include "mono3/ratfun.hpp"

namespace mono3 {

// Recursive-descent parser for rational function expressions.
// Grammar: expr := term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := ('-'|'+')* base ('^' int)?
//          base := integer | name | 'sqrt' '(' expr ')' | '(' expr ')'
// Every name must already be interned (variables/parameters/adjuncts); the
// parser never invents symbols, so typos in scripts fail loudly.
class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s), pos_(0) {}

    static RatFn parse(const std::string& s) {
        Parser p(s);
        RatFn r = p.expr();
        p.skip_ws();
        if (p.pos_ != p.s_.size()) p.fail("trailing input");
        return r;
    }

  private:
    RatFn expr() {
        RatFn r = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                r = r + term();
            } else if (peek() == '-') {
                ++pos_;
                r = r - term();
            } else
                return r;
        }
    }
    RatFn term() {
        RatFn r = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                r = r * factor();
            } else if (peek() == '/') {
                ++pos_;
                r = r / factor();
            } else
                return r;
        }
    }
    RatFn factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        RatFn b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool eneg = false;
            if (peek() == '-') {
                eneg = true;
                ++pos_;
            }
            long e = read_int();
            b = b.pow(eneg ? -e : e);
        }
        return neg ? -b : b;
    }
    RatFn base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            skip_ws();
            if (peek() != ')') fail("expected )");
            ++pos_;
            return r;
        }
        if (std::isdigit((unsigned char)c)) return RatFn(Q(read_int()));
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name = read_name();
            skip_ws();
            if (name == "sqrt") {
                if (peek() != '(') fail("sqrt needs (");
                // the adjunct symbol is named 'sqrt(<inner>)' verbatim
                size_t depth = 0, start = pos_;
                do {
                    if (peek() == '(') ++depth;
                    if (peek() == ')') --depth;
                    if (pos_ >= s_.size()) fail("unterminated sqrt(");
                    ++pos_;
                } while (depth > 0);
                std::string inner = s_.substr(start, pos_ - start);
                return RatFn::sym("sqrt" + inner);
            }
            return RatFn::sym(name);
        }
        fail("unexpected character");
        return RatFn();
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    long read_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    std::string read_name() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("parse error at " + std::to_string(pos_) + " in '" + s_ +
                                 "': " + msg);
    }

    const std::string& s_;
    size_t pos_;
};

inline RatFn rf(const std::string& s) { return Parser::parse(s); }

}  // namespace mono3

#endif
