#ifndef ROUGHREL_ROUGHREL_HPP
#define ROUGHREL_ROUGHREL_HPP

#include "roughrel/bitset.hpp"
#include "roughrel/claims.hpp"
#include "roughrel/closures.hpp"
#include "roughrel/definable.hpp"
#include "roughrel/oracle.hpp"
#include "roughrel/relation_io.hpp"
#include "roughrel/relcore.hpp"
#include "roughrel/rough.hpp"

#endif  // ROUGHREL_ROUGHREL_HPP
