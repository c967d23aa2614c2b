#include "pocut/stats.hpp"

namespace pocut {
namespace detail {

// 0.995 quantiles of Student's t for df = 1..200, 4 decimals.
const double kT995[200] = {
    63.6567, 9.9248, 5.8409, 4.6041, 4.0321, 3.7074, 3.4995, 3.3554,
    3.2498, 3.1693, 3.1058, 3.0545, 3.0123, 2.9768, 2.9467, 2.9208,
    2.8982, 2.8784, 2.8609, 2.8453, 2.8314, 2.8188, 2.8073, 2.7969,
    2.7874, 2.7787, 2.7707, 2.7633, 2.7564, 2.7500, 2.7440, 2.7385,
    2.7333, 2.7284, 2.7238, 2.7195, 2.7154, 2.7116, 2.7079, 2.7045,
    2.7012, 2.6981, 2.6951, 2.6923, 2.6896, 2.6870, 2.6846, 2.6822,
    2.6800, 2.6778, 2.6757, 2.6737, 2.6718, 2.6700, 2.6682, 2.6665,
    2.6649, 2.6633, 2.6618, 2.6603, 2.6589, 2.6575, 2.6561, 2.6549,
    2.6536, 2.6524, 2.6512, 2.6501, 2.6490, 2.6479, 2.6469, 2.6459,
    2.6449, 2.6439, 2.6430, 2.6421, 2.6412, 2.6403, 2.6395, 2.6387,
    2.6379, 2.6371, 2.6364, 2.6356, 2.6349, 2.6342, 2.6335, 2.6329,
    2.6322, 2.6316, 2.6309, 2.6303, 2.6297, 2.6291, 2.6286, 2.6280,
    2.6275, 2.6269, 2.6264, 2.6259, 2.6254, 2.6249, 2.6244, 2.6239,
    2.6235, 2.6230, 2.6226, 2.6221, 2.6217, 2.6213, 2.6208, 2.6204,
    2.6200, 2.6196, 2.6193, 2.6189, 2.6185, 2.6181, 2.6178, 2.6174,
    2.6171, 2.6167, 2.6164, 2.6161, 2.6157, 2.6154, 2.6151, 2.6148,
    2.6145, 2.6142, 2.6139, 2.6136, 2.6133, 2.6130, 2.6127, 2.6125,
    2.6122, 2.6119, 2.6117, 2.6114, 2.6111, 2.6109, 2.6106, 2.6104,
    2.6102, 2.6099, 2.6097, 2.6095, 2.6092, 2.6090, 2.6088, 2.6086,
    2.6083, 2.6081, 2.6079, 2.6077, 2.6075, 2.6073, 2.6071, 2.6069,
    2.6067, 2.6065, 2.6063, 2.6061, 2.6060, 2.6058, 2.6056, 2.6054,
    2.6052, 2.6051, 2.6049, 2.6047, 2.6045, 2.6044, 2.6042, 2.6041,
    2.6039, 2.6037, 2.6036, 2.6034, 2.6033, 2.6031, 2.6030, 2.6028,
    2.6027, 2.6025, 2.6024, 2.6022, 2.6021, 2.6020, 2.6018, 2.6017,
    2.6015, 2.6014, 2.6013, 2.6011, 2.6010, 2.6009, 2.6008, 2.6006,
};

}  // namespace detail

double t_quantile_995(int df) {
  if (df < 1) df = 1;
  if (df > 200) return kNormalQ995;
  return detail::kT995[df - 1];
}

}  // namespace pocut
