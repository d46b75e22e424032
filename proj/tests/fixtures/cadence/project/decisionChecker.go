package cadence

func (x *handler) run() {
	if x.ready {
		if c.config.EnableStickyQuery {
			x.apply()
		}
	}
}
