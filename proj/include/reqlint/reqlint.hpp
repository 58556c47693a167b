#pragma once

#include "reqlint/analysis.hpp"
#include "reqlint/corpus.hpp"
#include "reqlint/error.hpp"
#include "reqlint/language.hpp"
#include "reqlint/lexicon.hpp"
#include "reqlint/report.hpp"
#include "reqlint/rules.hpp"
#include "reqlint/segmentation.hpp"
#include "reqlint/stats.hpp"
#include "reqlint/tagger.hpp"
#include "reqlint/tags.hpp"
