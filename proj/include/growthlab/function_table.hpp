#pragma once

/* FunctionTable: exact tabulation of a function N -> N on a finite
 * horizon, indexed r = 1..N.  This is the common currency of all
 * growth, distortion and closure operations.
 */

#include "growthlab/bigint.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace growthlab {

class FunctionTable {
public:
    FunctionTable() = default;

    explicit FunctionTable(std::vector<BigInt> values) : values_(std::move(values))
    {
        for (const BigInt& v : values_)
            if (v < 0)
                throw std::invalid_argument("FunctionTable: negative value");
    }

    static FunctionTable from_generator(int horizon, const std::function<BigInt(int)>& f)
    {
        if (horizon < 1)
            throw std::invalid_argument("FunctionTable: horizon must be >= 1");
        std::vector<BigInt> v;
        v.reserve(static_cast<std::size_t>(horizon));
        for (int r = 1; r <= horizon; ++r)
            v.push_back(f(r));
        return FunctionTable(std::move(v));
    }

    int horizon() const { return static_cast<int>(values_.size()); }

    /* f(r), 1-based; r = 0 is deliberately not stored */
    const BigInt& at(int r) const
    {
        if (r < 1 || r > horizon())
            throw std::out_of_range("FunctionTable::at: r outside [1, horizon]");
        return values_[static_cast<std::size_t>(r - 1)];
    }

    const std::vector<BigInt>& values() const { return values_; }

    bool operator==(const FunctionTable& o) const { return values_ == o.values_; }

    std::string to_csv() const
    {
        std::ostringstream out;
        out << "r,value\n";
        for (int r = 1; r <= horizon(); ++r)
            out << r << "," << at(r).str() << "\n";
        return out.str();
    }

    /* values rendered as decimal strings so arbitrarily large entries
     * survive a JSON round trip bit-exactly */
    std::string to_json() const
    {
        std::ostringstream out;
        out << "{\"horizon\": " << horizon() << ", \"values\": [";
        for (int r = 1; r <= horizon(); ++r) {
            if (r > 1)
                out << ", ";
            out << "\"" << at(r).str() << "\"";
        }
        out << "]}";
        return out.str();
    }

    static FunctionTable from_csv_text(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("FunctionTable: empty CSV");
        if (line != "r,value" && line != "r,value\r")
            throw std::invalid_argument("FunctionTable: expected header 'r,value'");
        std::vector<BigInt> v;
        int expected = 1;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("FunctionTable: malformed CSV row: " + line);
            const int r = std::stoi(line.substr(0, comma));
            if (r != expected)
                throw std::invalid_argument("FunctionTable: rows must be 1..N without gaps");
            v.push_back(parse_bigint(line.substr(comma + 1)));
            ++expected;
        }
        if (v.empty())
            throw std::invalid_argument("FunctionTable: no rows");
        return FunctionTable(std::move(v));
    }

    static FunctionTable from_csv_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return from_csv_text(ss.str());
    }

private:
    std::vector<BigInt> values_;
};

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace growthlab
