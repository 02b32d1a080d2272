#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "wpn/errors.hpp"
#include "wpn/suffix_snapshot.hpp"
#include "wpn/url.hpp"

namespace wpn {

/// Set of public suffixes with longest-match stripping. Entries are literal
/// (no wildcard syntax); anything the list does not know falls back to
/// final-label removal so novel TLDs still strip.
class SuffixList {
public:
    static SuffixList from_lines(std::string_view text) {
        SuffixList list;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            auto line = detail::trim(text.substr(pos, eol - pos));
            if (!line.empty() && line.front() != '#') list.suffixes_.emplace(line);
            pos = eol + 1;
        }
        return list;
    }

    static SuffixList from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) raise(ErrorCode::IoError, "cannot open suffix list: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_lines(buf.str());
    }

    /// Bundled snapshot; built once, shared.
    static const SuffixList& bundled() {
        static const SuffixList list = from_lines(kSuffixSnapshot);
        return list;
    }

    bool contains(std::string_view suffix) const {
        return suffixes_.count(std::string(suffix)) > 0;
    }

    std::size_t size() const { return suffixes_.size(); }

    /// Remove the longest matching public suffix (with its leading dot);
    /// unknown suffixes lose their final label instead.
    std::string strip(std::string_view hostname) const {
        if (contains(hostname)) {
            raise(ErrorCode::DegenerateHost, "host is exactly a public suffix: " + std::string(hostname));
        }
        // Longest suffix = earliest dot whose tail is listed.
        for (std::size_t i = 0; i < hostname.size(); ++i) {
            if (hostname[i] == '.' && contains(hostname.substr(i + 1))) {
                if (i == 0) {
                    raise(ErrorCode::DegenerateHost, "nothing remains after suffix removal: " + std::string(hostname));
                }
                return std::string(hostname.substr(0, i));
            }
        }
        const auto last_dot = hostname.rfind('.');
        if (last_dot == std::string_view::npos || last_dot == 0) {
            raise(ErrorCode::DegenerateHost, "nothing remains after suffix removal: " + std::string(hostname));
        }
        return std::string(hostname.substr(0, last_dot));
    }

private:
    std::unordered_set<std::string> suffixes_;
};

/// normalize + strip + tokenize in one step.
inline TokenizedUrl prepare_url(std::string_view raw, std::size_t source, const SuffixList& suffixes) {
    TokenizedUrl out;
    out.source = source;
    out.registrable = suffixes.strip(normalize(raw));
    if (out.registrable.empty()) {
        raise(ErrorCode::DegenerateHost, "empty registrable for: " + std::string(raw));
    }
    out.tokens = tokenize(out.registrable);
    return out;
}

} // namespace wpn
