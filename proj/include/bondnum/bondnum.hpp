#pragma once

#include "bondnum/bondage.hpp"
#include "bondnum/bounds.hpp"
#include "bondnum/canon.hpp"
#include "bondnum/domination.hpp"
#include "bondnum/embedding.hpp"
#include "bondnum/enumerate.hpp"
#include "bondnum/genus_search.hpp"
#include "bondnum/graph.hpp"
#include "bondnum/graph6.hpp"
#include "bondnum/harness.hpp"
#include "bondnum/numeric.hpp"
