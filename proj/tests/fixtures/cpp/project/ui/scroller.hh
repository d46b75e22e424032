#pragma once

class Scroller {
public:
    void Scroll(int dy) {
        if (features::kEnableSmoothScroll) {
            Animate(dy);
        } else {
            Jump(dy);
        }
    }
};
