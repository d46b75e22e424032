namespace Contoso.Shop {
    public class CheckoutController {
        public void Post(Order order) {
            if (order.IsValid) {
                if (Features.EnableCheckout) {
                    Submit(order);
                } else if (Features.UseNewPricing) {
                    Reprice(order);
                }
            }
        }
    }
}
