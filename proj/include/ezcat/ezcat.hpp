// Umbrella header.

#ifndef EZCAT_EZCAT_HPP
#define EZCAT_EZCAT_HPP

#include "ezcat/bigint.hpp"
#include "ezcat/bipresheaf.hpp"
#include "ezcat/category.hpp"
#include "ezcat/colimit.hpp"
#include "ezcat/core.hpp"
#include "ezcat/corpus.hpp"
#include "ezcat/diagonal.hpp"
#include "ezcat/homology.hpp"
#include "ezcat/instances.hpp"
#include "ezcat/linalg.hpp"
#include "ezcat/presheaf.hpp"
#include "ezcat/textio.hpp"
#include "ezcat/verify.hpp"

#endif  // EZCAT_EZCAT_HPP
