#pragma once

#include "arxivnet/arxiv_id.hpp"
#include "arxivnet/categories.hpp"
#include "arxivnet/centrality.hpp"
#include "arxivnet/community.hpp"
#include "arxivnet/csv.hpp"
#include "arxivnet/diffusion_graph.hpp"
#include "arxivnet/error.hpp"
#include "arxivnet/graphml.hpp"
#include "arxivnet/hits.hpp"
#include "arxivnet/ingest.hpp"
#include "arxivnet/language.hpp"
#include "arxivnet/pipeline.hpp"
#include "arxivnet/profiling.hpp"
#include "arxivnet/report.hpp"
#include "arxivnet/sha256.hpp"
#include "arxivnet/spreader_network.hpp"
#include "arxivnet/synthetic.hpp"
#include "arxivnet/time.hpp"
#include "arxivnet/undirected_graph.hpp"
