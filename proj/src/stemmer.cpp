#include "eventvq/stemmer.hpp"

#include <array>

namespace eventvq {
namespace {

// Working buffer: b[0..k] is the current stem. Indices are signed; a
// measure/vowel query over an empty prefix (j < 0) is legal and yields 0.
struct Stem {
    std::string b;
    int k = 0;  // index of last char

    bool cons(int i) const {
        switch (b[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Number of consonant-vowel sequences in b[0..j]: [C](VC)^m[V]
    int measure(int j) const {
        int n = 0, i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem(int j) const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int j) const {
        return j >= 1 && b[j] == b[j - 1] && cons(j);
    }

    // cvc where the final c is not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char c = b[i];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) const {
        int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        return b.compare(k + 1 - len, len, s) == 0;
    }

    // Replaces the matched suffix of length len with s.
    void set_to(int len, std::string_view s) {
        b.resize(k + 1 - len);
        b += s;
        k = static_cast<int>(b.size()) - 1;
    }

    void truncate(int new_last) {
        k = new_last;
        b.resize(k + 1);
    }
};

struct Rule { std::string_view from, to; };

void apply_rules(Stem& z, const Rule* rules, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (z.ends(rules[i].from)) {
            // first listed match decides, whether or not the measure allows it
            if (z.measure(z.k - static_cast<int>(rules[i].from.size())) > 0)
                z.set_to(static_cast<int>(rules[i].from.size()), rules[i].to);
            return;
        }
    }
}

void step1ab(Stem& z) {
    if (z.b[z.k] == 's') {
        if (z.ends("sses")) z.truncate(z.k - 2);
        else if (z.ends("ies")) z.set_to(3, "i");
        else if (z.k >= 1 && z.b[z.k - 1] != 's') z.truncate(z.k - 1);
    }
    bool fired = false;
    if (z.ends("eed")) {
        if (z.measure(z.k - 3) > 0) z.truncate(z.k - 1);
    } else if (z.ends("ed") && z.vowel_in_stem(z.k - 2)) {
        z.truncate(z.k - 2);
        fired = true;
    } else if (z.ends("ing") && z.vowel_in_stem(z.k - 3)) {
        z.truncate(z.k - 3);
        fired = true;
    }
    if (fired) {
        if (z.ends("at") || z.ends("bl") || z.ends("iz")) {
            z.b.push_back('e');
            z.k = static_cast<int>(z.b.size()) - 1;
        } else if (z.double_cons(z.k)) {
            char c = z.b[z.k];
            if (c != 'l' && c != 's' && c != 'z') z.truncate(z.k - 1);
        } else if (z.measure(z.k) == 1 && z.cvc(z.k)) {
            z.b.push_back('e');
            z.k = static_cast<int>(z.b.size()) - 1;
        }
    }
}

void step1c(Stem& z) {
    if (z.ends("y") && z.vowel_in_stem(z.k - 1)) z.b[z.k] = 'i';
}

constexpr std::array<Rule, 21> kStep2{{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"}, {"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"},
    {"ousli", "ous"}, {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"},
    {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"},
    {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}, {"logi", "log"},
}};

constexpr std::array<Rule, 7> kStep3{{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"}, {"ful", ""}, {"ness", ""},
}};

void step4(Stem& z) {
    static constexpr std::array<std::string_view, 19> suffixes{
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ion",
        "ism", "ate", "iti", "ous", "ive", "ize", "al", "er", "ic", "ou",
    };
    for (auto s : suffixes) {
        if (!z.ends(s)) continue;
        int j = z.k - static_cast<int>(s.size());
        if (s == "ion" && !(j >= 0 && (z.b[j] == 's' || z.b[j] == 't'))) return;
        if (z.measure(j) > 1) z.truncate(j);
        return;
    }
}

void step5(Stem& z) {
    if (z.b[z.k] == 'e') {
        int m = z.measure(z.k - 1);
        if (m > 1 || (m == 1 && !z.cvc(z.k - 1))) z.truncate(z.k - 1);
    }
    if (z.b[z.k] == 'l' && z.double_cons(z.k) && z.measure(z.k - 1) > 1)
        z.truncate(z.k - 1);
}

}  // namespace

std::string porter_stem(std::string_view word) {
    if (word.size() <= 2) return std::string(word);
    Stem z{std::string(word), static_cast<int>(word.size()) - 1};
    step1ab(z);
    step1c(z);
    apply_rules(z, kStep2.data(), kStep2.size());
    apply_rules(z, kStep3.data(), kStep3.size());
    step4(z);
    step5(z);
    z.b.resize(z.k + 1);
    return z.b;
}

}  // namespace eventvq
