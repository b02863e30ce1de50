#pragma once

#include "spdn/autoencoder.hpp"
#include "spdn/entropy.hpp"
#include "spdn/image.hpp"
#include "spdn/image_io.hpp"
#include "spdn/median.hpp"
#include "spdn/noise.hpp"
#include "spdn/schemes.hpp"
#include "spdn/ssim.hpp"
#include "spdn/synthetic.hpp"
