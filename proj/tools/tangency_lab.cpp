#include <iostream>

int main() {
    std::cout << "tangency-lab (cli wiring pending)\n";
    return 0;
}
