// Data files compiled into the library.
#ifndef KCRYSTAL_DATA_HPP_
#define KCRYSTAL_DATA_HPP_

#include <string_view>

namespace kcrystal {

std::string_view embedded_catalog_text();   // data/catalog.txt
std::string_view embedded_fixtures_text();  // data/fixtures.txt

} // namespace kcrystal
#endif
