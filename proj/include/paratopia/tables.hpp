#pragma once

#include <map>
#include <set>
#include <tuple>
#include <string>
#include <utility>

namespace paratopia {

// The published catalogue of admissible cycle structures, transcribed once
// into tables_data.cpp. Table 1 covers the (12) shape for n <= 12, table 2
// for 13 <= n <= 17, table 3 the (123) shape for n <= 17.
class PublishedTables {
public:
    static const PublishedTables& get();

    const std::set<std::pair<std::string, std::string>>& members12(int n) const;
    const std::set<std::string>& members123(int n) const;
    bool has12(int n) const;
    bool has123(int n) const;

    // raw transcription text (for checksum pinning in tests)
    static const char* raw12();
    static const char* raw123();

    // (12) classes provably missing from the published listing: tests build
    // and verify a witness square for each before trusting this list.
    static const std::set<std::tuple<int, std::string, std::string>>& verified_omissions_12();

private:
    PublishedTables();
    std::map<int, std::set<std::pair<std::string, std::string>>> t12_;
    std::map<int, std::set<std::string>> t123_;
};

}  // namespace paratopia
