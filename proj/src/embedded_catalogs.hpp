#pragma once

// Catalog texts baked into the library at build time from catalogs/*.cat
// so suites work without a data directory at runtime.
namespace izr::detail {

extern const char* const kCatalogL2;
extern const char* const kCatalogL3;
extern const char* const kCatalogEquivalence;
extern const char* const kCatalogTransfer;
extern const char* const kCatalogIsLemma;
extern const char* const kCatalogSTheorem;

}  // namespace izr::detail
