#pragma once

#include "zolosign/identities.hpp"
#include "zolosign/modmath.hpp"
#include "zolosign/perm.hpp"
#include "zolosign/proofkit.hpp"
#include "zolosign/symbols.hpp"
#include "zolosign/verify.hpp"
#include "zolosign/zperms.hpp"
