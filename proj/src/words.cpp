#include "panto/words.hpp"

#include <algorithm>

#include "json.hpp"
#include "panto/numerics.hpp"

namespace panto {

std::optional<Letter> letter_from_char(char c) {
    if (c == 'a') return Letter::a;
    if (c == 'b') return Letter::b;
    return std::nullopt;
}

Word Word::from_string(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto l = letter_from_char(text[i]);
        if (!l)
            throw std::invalid_argument("word may contain only 'a' and 'b' (offending character at position " +
                                        std::to_string(i) + ")");
        w.push_back(*l);
    }
    return w;
}

std::string Word::str() const {
    std::string s;
    s.reserve(size());
    for (Letter l : letters_) s += to_char(l);
    return s;
}

std::size_t count_occurrences(const Word& w, Letter alpha) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), alpha));
}

std::string_view failure_name(ValidationFailure f) {
    switch (f) {
        case ValidationFailure::none: return "none";
        case ValidationFailure::empty_image: return "empty image";
        case ValidationFailure::unequal_lengths: return "unequal image lengths";
        case ValidationFailure::lambda_too_small: return "lambda < 2";
        case ValidationFailure::occurrence_counts: return "occurrence counts differ between images";
        case ValidationFailure::missing_letter: return "a letter never occurs";
        case ValidationFailure::delta_condition: return "delta condition";
        case ValidationFailure::not_prolongable: return "no image starts with its own letter";
    }
    return "?";
}

std::string ValidationReport::message() const {
    if (accepted) return "accepted";
    std::string m = "rejected: ";
    m += failure_name(failure);
    if (failure == ValidationFailure::delta_condition) {
        m += ": " + std::to_string(delta1_a_in_sigma_a - delta1_a_in_sigma_b) + " != 1";
    }
    return m;
}

namespace {

std::int64_t weighted_a_count(const Word& image) {
    // sum over positions k holding 'a' of the weight (lambda - k - 1)
    const auto lambda = static_cast<std::int64_t>(image.size());
    std::int64_t s = 0;
    for (std::int64_t k = 0; k < lambda; ++k)
        if (image[static_cast<std::size_t>(k)] == Letter::a) s += lambda - k - 1;
    return s;
}

}  // namespace

ValidationReport validate(const Word& image_a, const Word& image_b) {
    ValidationReport r;
    r.image_a = image_a;
    r.image_b = image_b;
    auto reject = [&](ValidationFailure f) {
        r.failure = f;
        r.accepted = false;
        return r;
    };
    if (image_a.empty() || image_b.empty()) return reject(ValidationFailure::empty_image);
    if (image_a.size() != image_b.size()) return reject(ValidationFailure::unequal_lengths);
    r.lambda = static_cast<int>(image_a.size());
    if (r.lambda < 2) return reject(ValidationFailure::lambda_too_small);
    r.lambda_a = static_cast<int>(count_occurrences(image_a, Letter::a));
    r.lambda_b = static_cast<int>(count_occurrences(image_a, Letter::b));
    if (count_occurrences(image_b, Letter::a) != static_cast<std::size_t>(r.lambda_a))
        return reject(ValidationFailure::occurrence_counts);
    if (r.lambda_a == 0 || r.lambda_b == 0) return reject(ValidationFailure::missing_letter);
    r.delta1_a_in_sigma_a = weighted_a_count(image_a);
    r.delta1_a_in_sigma_b = weighted_a_count(image_b);
    if (r.delta1_a_in_sigma_a - r.delta1_a_in_sigma_b != 1)
        return reject(ValidationFailure::delta_condition);
    r.prolongable_a = image_a[0] == Letter::a;
    r.prolongable_b = image_b[0] == Letter::b;
    if (!r.prolongable_a && !r.prolongable_b) return reject(ValidationFailure::not_prolongable);
    r.accepted = true;
    return r;
}

Substitution Substitution::from_images(Word image_a, Word image_b) {
    ValidationReport r = validate(image_a, image_b);
    if (!r.accepted) throw ValidationError(std::move(r));
    const Letter start = r.prolongable_a ? Letter::a : Letter::b;
    return Substitution(std::move(image_a), std::move(image_b), std::move(r), start);
}

namespace {

std::pair<Word, Word> parse_json_image_pair(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("substitution JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_string() ||
        !j["b"].is_string())
        throw ParseError("substitution JSON must be an object {\"a\": \"...\", \"b\": \"...\"}");
    const auto word_a = j["a"].get<std::string>();
    const auto word_b = j["b"].get<std::string>();
    if (word_a.empty()) throw ParseError("substitution JSON: empty image for 'a'");
    if (word_b.empty()) throw ParseError("substitution JSON: empty image for 'b'");
    try {
        return {Word::from_string(word_a), Word::from_string(word_b)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::pair<Word, Word> parse_image_pair(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_image_pair(text);

    // grammar: a:<word>,b:<word>
    auto expect = [&](std::size_t pos, std::string_view token) {
        if (text.substr(pos, token.size()) != token)
            throw ParseError("substitution text: expected '" + std::string(token) + "' at position " +
                             std::to_string(pos));
        return pos + token.size();
    };
    std::size_t pos = expect(0, "a:");
    const std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
        throw ParseError("substitution text: expected ',' separating the two images");
    const std::string_view word_a = text.substr(pos, comma - pos);
    pos = expect(comma + 1, "b:");
    const std::string_view word_b = text.substr(pos);
    if (word_a.empty()) throw ParseError("substitution text: empty image for 'a'");
    if (word_b.empty()) throw ParseError("substitution text: empty image for 'b'");
    try {
        return {Word::from_string(word_a), Word::from_string(word_b)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Substitution Substitution::parse(std::string_view text) {
    auto [image_a, image_b] = parse_image_pair(text);
    return from_images(std::move(image_a), std::move(image_b));
}

std::string Substitution::str() const { return "a:" + image_a_.str() + ",b:" + image_b_.str(); }

Rational delta_level(const Substitution& sub, Letter alpha, Letter beta, int ell) {
    if (ell < 0) throw std::invalid_argument("delta_level: negative level");
    const Word& image = sub.image(beta);
    const int lambda = sub.lambda();
    BigInt s = 0;
    for (int k = 0; k < lambda; ++k) {
        if (image[static_cast<std::size_t>(k)] != alpha) continue;
        const int w = lambda - k - 1;
        if (ell == 0) {
            s += 1;  // 0^0 = 1 by the level-0 convention
        } else {
            BigInt p = 1;
            for (int i = 0; i < ell; ++i) p *= w;
            s += p;
        }
    }
    return Rational(std::move(s), factorial(ell));
}

std::int64_t delta1_via_prefixes(const Substitution& sub, Letter beta) {
    const Word& image = sub.image(beta);
    // strict prefixes have lengths 1 .. lambda-1
    std::int64_t total = 0;
    std::int64_t running = 0;
    for (std::size_t len = 1; len + 1 <= image.size(); ++len) {
        if (image[len - 1] == Letter::a) ++running;
        total += running;
    }
    return total;
}

Word fixed_point_prefix(const Substitution& sub, std::size_t n) {
    Word w;
    w.push_back(sub.start_letter());
    while (w.size() < n) {
        Word next;
        next.reserve(w.size() * static_cast<std::size_t>(sub.lambda()));
        for (Letter l : w) {
            for (Letter m : sub.image(l)) {
                next.push_back(m);
                if (next.size() == n) break;
            }
            if (next.size() == n) break;
        }
        w = std::move(next);
    }
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(w[i]);
    return out;
}

std::optional<std::size_t> first_occurrence(const Substitution& sub, Letter alpha,
                                            std::size_t search_bound) {
    const Word prefix = fixed_point_prefix(sub, search_bound);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i] == alpha) return i;
    return std::nullopt;
}

DeltaTable::DeltaTable(const Substitution& sub, int levels) : sub_(sub) { ensure(levels); }

void DeltaTable::ensure(int level) {
    for (int ell = static_cast<int>(rows_.size()); ell <= level; ++ell) {
        rows_.push_back({delta_level(sub_, Letter::a, Letter::a, ell),
                         delta_level(sub_, Letter::b, Letter::a, ell),
                         delta_level(sub_, Letter::a, Letter::b, ell),
                         delta_level(sub_, Letter::b, Letter::b, ell)});
    }
}

const Rational& DeltaTable::delta(Letter alpha, Letter beta, int level) const {
    if (level < 0 || level > max_level()) throw std::out_of_range("DeltaTable: level not cached");
    return rows_[static_cast<std::size_t>(level)][2 * index_of(beta) + index_of(alpha)];
}

}  // namespace panto
