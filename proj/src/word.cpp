#include "welldoc/word.hpp"

#include <algorithm>
#include <sstream>

namespace welldoc {

std::string word_to_string(const Word& u) {
    bool digits = std::all_of(u.begin(), u.end(), [](Letter a) { return a <= 9; });
    std::string out;
    if (digits) {
        for (Letter a : u) out.push_back(static_cast<char>('0' + a));
        return out;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(u[i]);
    }
    return out;
}

Word word_from_string(const std::string& s) {
    Word u;
    if (s.empty()) return u;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw std::invalid_argument("bad letter '" + item + "' in word '" + s + "'");
            u.push_back(static_cast<Letter>(std::stoul(item)));
        }
        return u;
    }
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("bad symbol '") + c + "' in word '" + s + "'");
        u.push_back(static_cast<Letter>(c - '0'));
    }
    return u;
}

}  // namespace welldoc
