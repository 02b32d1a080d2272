#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wpn/errors.hpp"

namespace wpn {

enum class Label : std::uint8_t { Unlabeled, KnownLegit, KnownPhish };

inline const char* label_name(Label label) {
    switch (label) {
        case Label::Unlabeled: return "unlabeled";
        case Label::KnownLegit: return "known_legit";
        case Label::KnownPhish: return "known_phish";
    }
    return "?";
}

/// A raw input URL with its provenance.
struct UrlRecord {
    std::string raw;
    Label label = Label::Unlabeled;
};

/// The normalized, suffix-stripped form of a record plus its token list.
/// `source` indexes the record batch the pipeline is working on.
struct TokenizedUrl {
    std::size_t source = 0;
    std::string registrable;
    std::vector<std::string> tokens;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n\f\v";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

inline bool is_lower_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

} // namespace detail

/// Minimal UTF-8 well-formedness check (overlongs and surrogates rejected).
inline bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        int len;
        std::uint32_t cp;
        if ((b0 & 0xe0) == 0xc0) {
            len = 2;
            cp = b0 & 0x1f;
        } else if ((b0 & 0xf0) == 0xe0) {
            len = 3;
            cp = b0 & 0x0f;
        } else if ((b0 & 0xf8) == 0xf0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return false;
        }
        if (i + static_cast<std::size_t>(len) > n) return false;
        for (int j = 1; j < len; ++j) {
            const auto bj = static_cast<unsigned char>(s[i + static_cast<std::size_t>(j)]);
            if ((bj & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (bj & 0x3f);
        }
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp > 0x10ffff) return false;
        if (cp >= 0xd800 && cp <= 0xdfff) return false;
        i += static_cast<std::size_t>(len);
    }
    return true;
}

/// IPv4 dotted-quad or bracketed IPv6 hosts; these carry no lexical signal
/// and are dropped by the pipeline.
inline bool is_ip_literal(std::string_view host) {
    if (host.empty()) return false;
    if (host.front() == '[') return true;
    int labels = 0;
    std::size_t pos = 0;
    while (pos <= host.size()) {
        const auto dot = host.find('.', pos);
        const auto part = host.substr(pos, dot == std::string_view::npos ? host.size() - pos : dot - pos);
        if (part.empty() || part.size() > 3) return false;
        for (char c : part) {
            if (c < '0' || c > '9') return false;
        }
        ++labels;
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return labels == 4;
}

/// Reduce an arbitrary URL string to its lowercased hostname. Scheme,
/// credentials, port, path, query and fragment are discarded; a leading
/// "www." stays (it is only ever removed at the token level, via the
/// stopword option).
inline std::string normalize(std::string_view raw) {
    std::string_view s = detail::trim(raw);
    if (s.empty()) raise(ErrorCode::EmptyInput, "url is empty after trimming");
    if (!valid_utf8(s)) raise(ErrorCode::InvalidUtf8, "url is not valid UTF-8 text");

    // scheme://  (only if the prefix looks like a scheme, so "a.b//c" survives)
    if (const auto sep = s.find("://"); sep != std::string_view::npos) {
        bool scheme_like = sep > 0;
        for (std::size_t i = 0; i < sep && scheme_like; ++i) {
            const char c = s[i];
            const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                            (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
            scheme_like = ok && !(i == 0 && !((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')));
        }
        if (scheme_like) s.remove_prefix(sep + 3);
    }

    // authority ends at the first path/query/fragment delimiter
    if (const auto cut = s.find_first_of("/?#"); cut != std::string_view::npos) s = s.substr(0, cut);

    // user:pass@host
    if (const auto at = s.rfind('@'); at != std::string_view::npos) s.remove_prefix(at + 1);

    // :port (bracketed IPv6 hosts keep their brackets and are rejected below)
    if (!s.empty() && s.front() != '[') {
        if (const auto colon = s.rfind(':'); colon != std::string_view::npos) {
            bool digits = colon + 1 < s.size();
            for (std::size_t i = colon + 1; i < s.size(); ++i) {
                digits = digits && s[i] >= '0' && s[i] <= '9';
            }
            if (digits) s = s.substr(0, colon);
        }
    }

    while (!s.empty() && s.back() == '.') s.remove_suffix(1);
    while (!s.empty() && s.front() == '.') s.remove_prefix(1);
    if (s.empty()) raise(ErrorCode::EmptyInput, "nothing remains after stripping url syntax");

    std::string host(s);
    std::transform(host.begin(), host.end(), host.begin(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
    });
    if (is_ip_literal(host)) raise(ErrorCode::IpLiteralHost, "ip-literal host: " + host);
    return host;
}

/// Split a registrable string on every character outside [a-z0-9],
/// dropping empty fragments.
inline std::vector<std::string> tokenize(std::string_view registrable) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= registrable.size(); ++i) {
        if (i == registrable.size() || !detail::is_lower_alnum(registrable[i])) {
            if (i > start) tokens.emplace_back(registrable.substr(start, i - start));
            start = i + 1;
        }
    }
    if (tokens.empty()) raise(ErrorCode::NoTokens, "no tokens in '" + std::string(registrable) + "'");
    return tokens;
}

/// Sorted, deduplicated token set (the form the Dice metric consumes).
inline std::vector<std::string> token_set(const std::vector<std::string>& tokens) {
    std::vector<std::string> set(tokens);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

} // namespace wpn
