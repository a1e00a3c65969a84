#include "numeric/dump.hpp"

#include <cstdio>
#include <filesystem>

namespace corridor {

namespace {

struct File {
    std::FILE* f = nullptr;
    explicit File(const std::string& path) : f(std::fopen(path.c_str(), "wb")) {
        require(f != nullptr, ErrorCode::Io, "dump: cannot open " + path);
    }
    ~File() {
        if (f) std::fclose(f);
    }
};

}  // namespace

void dump_lcp(const LcpProblem& p, const LcpSolution* sol, const std::string& directory) {
    std::filesystem::create_directories(directory);
    const int dim = p.dimension();
    {
        File out(directory + "/M.csv");
        std::fprintf(out.f, "# corridor-csv v1: lcp-matrix row,col,value; %s\n",
                     p.block_descriptor().substr(0, p.block_descriptor().find('\n')).c_str());
        std::fprintf(out.f, "row,col,value\n");
        Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
        for (int c = 0; c < dim; ++c) {
            e[c] = 1.0;
            Eigen::VectorXd col = p.multiply(e);
            e[c] = 0.0;
            for (int r = 0; r < dim; ++r)
                if (col[r] != 0.0) std::fprintf(out.f, "%d,%d,%.12g\n", r, c, col[r]);
        }
    }
    {
        File out(directory + "/b.csv");
        std::fprintf(out.f, "# corridor-csv v1: lcp-rhs index,value\n");
        std::fprintf(out.f, "index,value\n");
        for (int r = 0; r < dim; ++r) std::fprintf(out.f, "%d,%.12g\n", r, p.rhs()[r]);
    }
    if (sol) {
        File out(directory + "/X.csv");
        std::fprintf(out.f, "# corridor-csv v1: lcp-solution index,value\n");
        std::fprintf(out.f, "index,value\n");
        for (int r = 0; r < dim; ++r) std::fprintf(out.f, "%d,%.12g\n", r, sol->x[r]);
    }
}

}  // namespace corridor
